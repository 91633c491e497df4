#pragma once

// Symbolic bases of the holomorphic order-m differential spaces over a
// rational base field, and exact divisor bookkeeping for single elements.
//
// Wild kinds (cyclic / elementary abelian, g_base = 0):
//   element(k, nu_x) = x^nu_x * w_k * g_k(x)^(-1) * (dx)^m,
//   0 <= nu_x <= Gamma_k(m) - 2m,
// where w_k generates the k-th character eigenspace and g_k(x) is the
// product of the (degree-one) ramified place polynomials with exponents
// nu_ik(m).
//
// Tame cyclic covers y^N = u (m = 1):
//   element(k, nu_x) = x^nu_x * y^(-k) * g_k(x) * dx,
//   1 <= k <= N-1, 0 <= nu_x <= Gamma_k(1) - 2,
// with g_k(x) carrying the exponents floor(k * vu_i / N).

#include "polydiff/boseck.hpp"

namespace polydiff {

struct BasisElement {
  Kind kind = Kind::Cyclic;
  unsigned long m = 1;
  Int k;    // character / eigenspace index
  Int nu_x; // power of x
  /// Per listed place: the exponent of its polynomial inside g_k(x)
  /// (nu_ik(m) for the wild kinds, floor(k vu_i / N) for tame).
  std::vector<Int> g_exponents;
};

/// Exact divisor of a basis element, grouped by the places of the top field.
struct PlaceDivisor {
  /// Coefficient at each place above listed place i (all conjugates share
  /// it).  Wild: the remainder (m delta_i - w_k(i)) mod ram_index[i];
  /// tame: e_i - 1 - (k phi_i mod e_i).  Always in [0, ram_index).
  std::vector<Int> ramified_coeffs;
  /// Number of places above listed place i.
  std::vector<Int> places_above;
  /// Places above x = infinity (always |G|: infinity stays unramified and
  /// split) and the shared coefficient Gamma_k(m) - 2m - nu_x there.
  Int places_over_infinity;
  Int infinity_coeff;
  /// Degree of the effective remainder: the conductor part of w_k plus the
  /// zero divisor of x^nu_x (nu_x * N for tame elements).
  Int residual_degree;
  /// Always m * (2 g_F - 2); the other fields are checked to close to it.
  Int total_degree;
};

struct HolomorphyCheck {
  bool holomorphic = false;
  std::string diagnostics; // empty when holomorphic
};

/// Enumerates the basis in (k, nu_x)-lexicographic order.  Requires a
/// rational base (g_base = 0); tame requires m = 1.  Size identities on
/// realizable input:
///   sum_k max(Gamma_k(m) - 2m + 1, 0) = (2m-1)(g_F - 1)   (m >= 2)
///   sum_k max(Gamma_k(1) - 1, 0)      = g_F               (m = 1)
std::vector<BasisElement> enumerate_basis(const ExtensionSpec& spec,
                                          unsigned long m);

/// Divisor of one element (holomorphic or not), against the table of the
/// same spec and order.
PlaceDivisor divisor_of_element(const BasisElement& elem,
                                const ExtensionSpec& spec,
                                const BoseckTable& table);

/// True iff every divisor coefficient is nonnegative; otherwise lists the
/// failures.  Used to certify enumerate_basis output and to reject
/// perturbed elements.
HolomorphyCheck verify_holomorphic(const BasisElement& elem,
                                   const ExtensionSpec& spec,
                                   const BoseckTable& table);

} // namespace polydiff
