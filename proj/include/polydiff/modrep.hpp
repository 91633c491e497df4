#pragma once

// Finite-field linear algebra oracles for the module theory behind the
// deformation counts.  Everything here is computed by explicit matrix
// manipulation over GF(p^n) so the closed-form dimension statements used
// elsewhere can be checked against an independent calculation.

#include "polydiff/core.hpp"

#include <cstdint>

namespace polydiff {

/// GF(p^n), elements as little-endian coefficient vectors over F_p modulo
/// the first monic irreducible of degree n in the base-p ordering of
/// coefficient vectors (constant coefficient least significant).  The
/// choice is deterministic so every run agrees on the representation.
class SmallField {
 public:
  using Elem = std::vector<unsigned long>;

  /// p prime, 1 <= n, p^n <= 16384.
  SmallField(unsigned long p, unsigned n);

  unsigned long p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned long order() const { return q_; }
  /// Monic modulus, n+1 coefficients, constant first.
  const std::vector<unsigned long>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(n_, 0); }
  Elem one() const { return from_uint(1); }
  /// The class of x (zero when n = 1, where the modulus is x itself).
  Elem gen() const;
  /// Base-p digits of v < p^n as an element.
  Elem from_uint(unsigned long v) const;
  unsigned long to_uint(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned long e) const;
  /// Fermat inverse a^(q-2); a must be nonzero.
  Elem inv(const Elem& a) const;

 private:
  unsigned long p_ = 2;
  unsigned n_ = 1;
  unsigned long q_ = 2;
  std::vector<unsigned long> modulus_;
};

/// Dense matrix over a SmallField, row-major.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SmallField::Elem> entries;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, const SmallField& f)
      : rows(r), cols(c), entries(r * c, f.zero()) {}
  SmallField::Elem& at(std::size_t r, std::size_t c) {
    return entries[r * cols + c];
  }
  const SmallField::Elem& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

ModMatrix identity_matrix(std::size_t j, const SmallField& f);
ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b,
                  const SmallField& f);
/// Row-echelon rank by Gaussian elimination with exact field inverses.
std::size_t mat_rank(ModMatrix m, const SmallField& f);

/// C(i, l) mod p by the Pascal recurrence (the primary route).
unsigned long binomial_mod_p(unsigned long i, unsigned long l,
                             unsigned long p);
/// The same value via Lucas' digit product; kept as a cross-check.
unsigned long lucas_binomial_mod_p(unsigned long i, unsigned long l,
                                   unsigned long p);

/// Kernel dimension of N^i for the k x k nilpotent Jordan block N
/// (ones on the superdiagonal), computed as k - rank(N^i) by explicit
/// elimination over GF(p^n).  Equals min(i, k); tests assert that.
std::size_t jordan_kernel_dim(std::size_t k, std::size_t i, unsigned long p,
                              unsigned n);

/// Action of the group element a in (F_q, +) on the j-dimensional module
/// W_j: M[i][l] = C(i, l) a^(i-l) for 0 <= l <= i < j, lower triangular
/// with unit diagonal.  Satisfies M(a) M(b) = M(a+b).
ModMatrix wj_action_matrix(std::size_t j, const SmallField::Elem& a,
                           const SmallField& f);

/// dim of the covariant space W_j / I W_j.  Row r of M(a) - 1 holds the
/// coordinates of (sigma_a - 1) w_r, so I W_j is the row space of the
/// vertically stacked blocks over the generators a = 1, e, ..., e^(n-1),
/// and the covariant dimension is j minus that stack's rank.
std::size_t covariant_dim_oracle(std::size_t j, const SmallField& f);

/// dim of the fixed space: v is fixed iff v^T (M(a) - 1) = 0 for every
/// generator, i.e. the left kernel of the horizontally stacked blocks.
/// Always 1 for 1 <= j <= q.
std::size_t fixed_space_dim(std::size_t j, const SmallField& f);

/// Closed form for covariant_dim_oracle, exact for all 1 <= j <= p^n: counts
/// the basis vectors theta_s (s < j) with C(r, s) = 0 mod p for every
/// r in (s, j-1], evaluated by a base-p digit recursion on j-1.
unsigned covariant_dim_closed(const Int& j, const Int& p, unsigned n);

/// The classical two-band description (1 for j <= p; for j > p: 1 when p | j,
/// else 2).  Exact for n <= 2 but an undercount for n >= 3 — first at
/// p = 2, n = 3, j = 7, where the true covariant dimension is 3.  Kept for
/// comparison and tested against covariant_dim_closed on its valid range.
unsigned covariant_dim_piecewise(const Int& j, const Int& p, unsigned n);

struct OracleRow {
  std::size_t j = 0;
  std::size_t covariant_oracle = 0;
  unsigned covariant_closed = 0;
  std::size_t fixed_dim = 0;
};

/// Rows for j = 1..q (OpenMP kernel; deterministic output order).
std::vector<OracleRow> oracle_sweep(unsigned long p, unsigned n);
/// Straight serial reference of the same sweep.
std::vector<OracleRow> oracle_sweep_serial(unsigned long p, unsigned n);

} // namespace polydiff
