#pragma once

// Ramification invariants of the covers described in core.hpp: per-place
// different exponents delta_i, character-indexed vanishing orders nu_ik(m)
// for the order-m differentials, and the column sums Gamma_k(m).  These are
// the quantities everything downstream (decomposition, bases, deformation
// counts) is extracted from.

#include "polydiff/core.hpp"

namespace polydiff {

/// delta_i of a cyclic-tower place:
///   (p-1) * sum_{j > n-e} (phi(i,j) + 1) * p^(n-j).
/// Also checked against the equivalent form
///   (p-1) * sum_j phi(i,j) p^(n-j) + (p^e - 1)
/// (equal exactly when phi vanishes below the ramified range).
Int different_exponent_cyclic(const CyclicPlace& place, const GroupParams& g);

/// delta_i = (q - 1)(phi + 1), q = p^n, for an elementary abelian place.
Int different_exponent_elab(const ElabPlace& place, const GroupParams& g);

/// delta_i = e_i - 1 for a tame place.
Int different_exponent_tame(const TamePlace& place);

/// Character weight at a cyclic place: w_k(i) = sum_j a_j phi(i,j) p^(n-j)
/// with k = a_1 + a_2 p + ... + a_n p^(n-1) in base-p digits.
Int basis_weight_cyclic(const CyclicPlace& place, const GroupParams& g,
                        const Int& k);

/// Shared floor form floor((m*delta + weight) / p^e); weight may be
/// negative, the floor is mathematical.
Int nu_generic(const Int& delta, unsigned long e, const Int& weight,
               const Int& p, unsigned long m);

/// nu_ik(m) = floor((m*delta_i - w_k(i)) / p^(e_i)), cyclic place.
Int nu_cyclic(const CyclicPlace& place, const GroupParams& g, const Int& k,
              unsigned long m);

/// nu_ik(m) = floor((m(q-1)(phi+1) - k*phi) / q), elementary abelian place.
Int nu_elab(const ElabPlace& place, const GroupParams& g, const Int& k,
            unsigned long m);

/// Tame place, m = 1 only: nu_ik(1) = <k * vu_i / N>, kept as an exact
/// rational (denominator divides e_i).
Rat nu_tame(const TamePlace& place, const Int& n_deg, const Int& k);

/// Dispatcher over spec kind; wild kinds return an integer-valued rational,
/// tame requires m = 1 (UnsupportedError otherwise).
Rat nu(const ExtensionSpec& spec, std::size_t place_index, const Int& k,
       unsigned long m);

/// Number of places of the top field above listed place i:
/// p^(n - e_i) (cyclic), 1 (elementary abelian), N / e_i (tame).
Int places_above(const ExtensionSpec& spec, std::size_t place_index);

/// deg Diff = sum_i places_above(i) * delta_i.
Int deg_different(const ExtensionSpec& spec);

/// 2 g_F - 2 = |G| (2 g_base - 2) + deg Diff.  Always an exact integer;
/// whether it is even (so g_F exists) is a realizability question.
Int two_g_top_minus_two(const ExtensionSpec& spec);

/// Derived genus of the top field; RealizabilityError when 2g-2 is odd.
Int genus_top(const ExtensionSpec& spec);

/// Full invariant table of a spec at order m: one column per character
/// k = 0..|G|-1, one row per listed place.
struct BoseckTable {
  Kind kind = Kind::Cyclic;
  unsigned long m = 1;
  Int p;      // characteristic
  Int width;  // |G|, number of columns
  std::vector<Int> delta;           // per listed place
  std::vector<Int> ram_index;       // per listed place: p^(e_i) or e_i
  std::vector<std::vector<Rat>> nu; // nu[i][k]; integral for wild kinds
  std::vector<Int> gamma;           // Gamma_k = sum_i nu[i][k], exact integers
  Int deg_diff;
  Int g_base;
  Int g_top;
};

/// Builds the table with the OpenMP column kernel.  Validates the spec
/// first; tame specs require m = 1.  Every build re-checks the exact column
/// sum identity 2 * sum_k Gamma_k(m) == (2m-1) * deg Diff and, for tame
/// covers, integrality of each Gamma_k.
BoseckTable boseck_table(const ExtensionSpec& spec, unsigned long m);

/// Straight-line serial reference implementation of the same table; the
/// parallel kernel is tested for equality against this.
BoseckTable boseck_table_serial(const ExtensionSpec& spec, unsigned long m);

} // namespace polydiff
