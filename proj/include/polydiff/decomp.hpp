#pragma once

// Indecomposable K[G]-module multiplicities of the space of holomorphic
// order-m differentials, extracted exactly from a BoseckTable.  For the wild
// kinds K[G] has |G| indecomposables, one of each dimension 1..|G|; for tame
// cyclic covers the indecomposables are the N characters.

#include "polydiff/boseck.hpp"

namespace polydiff {

struct Decomposition {
  Kind kind = Kind::Cyclic;
  unsigned long m = 1;
  /// Wild kinds: d[j] is the multiplicity of the (j+1)-dimensional
  /// indecomposable, j = 0..q-1 (d.back() is the projective multiplicity).
  /// Tame: d[j] is the multiplicity of the j-th character, j = 0..N-1.
  std::vector<Int> d;
  /// sum of multiplicity * module dimension; checked against the dimension
  /// of the differential space:
  ///   (2m-1)(g_F - 1) for wild m >= 2, g_F for m = 1.
  Int total_dim;
};

/// Cyclic tower, m >= 2:
///   d_q = Gamma_{q-1}(m) + (g_base - 1)(2m - 1),
///   d_k = Gamma_{k-1}(m) - Gamma_k(m)  (1 <= k <= q-1).
/// Negative multiplicities raise RealizabilityError naming the offending k.
Decomposition decompose_cyclic(const BoseckTable& t);

/// Cyclic tower, m = 1; requires a totally ramified place:
///   d_q = g_base,
///   d_k = Gamma_{k-1}(1) - Gamma_k(1) - [k == q-1]  (1 <= k <= q-1).
Decomposition decompose_cyclic_m1(const BoseckTable& t);

/// Elementary abelian, m >= 2:
///   d_q = Gamma_{q-1}(m) - 2m + 1,
///   d_k = Gamma_{k-1}(m) - Gamma_k(m)  (1 <= k <= q-1).
Decomposition decompose_elab(const BoseckTable& t);

/// Elementary abelian, m = 1, via the holomorphic basis counts
///   c_k = max(Gamma_k(1) - 1, 0) for k <= q-2, c_{q-1} = 0:
///   d_k = c_{k-1} - c_k  (1 <= k <= q-1),  d_q = c_{q-1} = 0.
Decomposition decompose_elab_m1(const BoseckTable& t);

/// Tame cyclic, m = 1:
///   d_0 = g_base,  d_k = Gamma_k(1) - 1 + g_base  (1 <= k <= N-1).
Decomposition decompose_tame(const BoseckTable& t);

/// Dispatch on the table's kind and order.  Cyclic m = 1 without a totally
/// ramified place is UnsupportedError.
Decomposition decompose(const BoseckTable& t);

} // namespace polydiff
