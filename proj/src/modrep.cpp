#include "polydiff/modrep.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydiff {

namespace {

constexpr unsigned long kMaxOrder = 16384;

/// Remainder of a mod the monic polynomial `mod` (coeff vectors over F_p,
/// constant first, mod.back() == 1).
std::vector<unsigned long> poly_mod(std::vector<unsigned long> a,
                                    const std::vector<unsigned long>& mod,
                                    unsigned long p) {
  const std::size_t n = mod.size() - 1;
  while (a.size() > n) {
    const unsigned long lead = a.back();
    const std::size_t shift = a.size() - 1 - n;
    if (lead != 0)
      for (std::size_t t = 0; t <= n; ++t) {
        unsigned long& c = a[shift + t];
        c = (c + (p - lead % p) * mod[t]) % p;
      }
    a.pop_back();
  }
  a.resize(n, 0);
  return a;
}

bool poly_is_zero(const std::vector<unsigned long>& a) {
  return std::all_of(a.begin(), a.end(),
                     [](unsigned long c) { return c == 0; });
}

/// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const std::vector<unsigned long>& poly,
                      unsigned long p) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    unsigned long count = 1;
    for (std::size_t t = 0; t < d; ++t) count *= p; // p^d candidates
    for (unsigned long v = 0; v < count; ++v) {
      std::vector<unsigned long> div(d + 1, 0);
      unsigned long rest = v;
      for (std::size_t t = 0; t < d; ++t) {
        div[t] = rest % p;
        rest /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(std::vector<unsigned long>(poly), div, p)))
        return false;
    }
  }
  return true;
}

} // namespace

SmallField::SmallField(unsigned long p, unsigned n) : p_(p), n_(n) {
  if (n < 1) throw ValidationError("SmallField: n must be >= 1");
  if (!is_prime(Int(p))) throw ValidationError("SmallField: p must be prime");
  q_ = 1;
  for (unsigned t = 0; t < n; ++t) {
    if (q_ > kMaxOrder / p) throw UnsupportedError("SmallField: p^n > 16384");
    q_ *= p;
  }
  // First irreducible monic x^n + c_{n-1} x^{n-1} + ... + c_0 in increasing
  // base-p value of (c_0, c_1, ...).
  for (unsigned long v = 0; v < q_; ++v) {
    std::vector<unsigned long> cand(n + 1, 0);
    unsigned long rest = v;
    for (unsigned t = 0; t < n; ++t) {
      cand[t] = rest % p;
      rest /= p;
    }
    cand[n] = 1;
    if (poly_irreducible(cand, p)) {
      modulus_ = cand;
      break;
    }
  }
  if (modulus_.empty())
    throw InternalError("SmallField: no irreducible polynomial found");
}

SmallField::Elem SmallField::gen() const {
  Elem e = zero();
  if (n_ >= 2) e[1] = 1;
  return e; // for n = 1 the class of x is 0
}

SmallField::Elem SmallField::from_uint(unsigned long v) const {
  if (v >= q_) throw std::out_of_range("SmallField::from_uint: v >= q");
  Elem e(n_, 0);
  for (unsigned t = 0; t < n_; ++t) {
    e[t] = v % p_;
    v /= p_;
  }
  return e;
}

unsigned long SmallField::to_uint(const Elem& a) const {
  unsigned long v = 0;
  for (unsigned t = n_; t-- > 0;) v = v * p_ + a[t];
  return v;
}

bool SmallField::is_zero(const Elem& a) const { return poly_is_zero(a); }

SmallField::Elem SmallField::add(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (unsigned t = 0; t < n_; ++t) r[t] = (a[t] + b[t]) % p_;
  return r;
}

SmallField::Elem SmallField::sub(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (unsigned t = 0; t < n_; ++t) r[t] = (a[t] + p_ - b[t] % p_) % p_;
  return r;
}

SmallField::Elem SmallField::mul(const Elem& a, const Elem& b) const {
  std::vector<unsigned long> prod(2 * n_ - 1, 0);
  for (unsigned s = 0; s < n_; ++s) {
    if (a[s] == 0) continue;
    for (unsigned t = 0; t < n_; ++t)
      prod[s + t] = (prod[s + t] + a[s] * b[t]) % p_;
  }
  return poly_mod(std::move(prod), modulus_, p_);
}

SmallField::Elem SmallField::pow(const Elem& a, unsigned long e) const {
  Elem base = a;
  Elem acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

SmallField::Elem SmallField::inv(const Elem& a) const {
  if (is_zero(a)) throw InternalError("SmallField::inv: zero element");
  return pow(a, q_ - 2);
}

ModMatrix identity_matrix(std::size_t j, const SmallField& f) {
  ModMatrix m(j, j, f);
  for (std::size_t r = 0; r < j; ++r) m.at(r, r) = f.one();
  return m;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b,
                  const SmallField& f) {
  if (a.cols != b.rows) throw InternalError("mat_mul: shape mismatch");
  ModMatrix c(a.rows, b.cols, f);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (f.is_zero(a.at(r, k))) continue;
      for (std::size_t s = 0; s < b.cols; ++s) {
        if (f.is_zero(b.at(k, s))) continue;
        c.at(r, s) = f.add(c.at(r, s), f.mul(a.at(r, k), b.at(k, s)));
      }
    }
  return c;
}

std::size_t mat_rank(ModMatrix m, const SmallField& f) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && f.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < m.cols; ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    const SmallField::Elem scale = f.inv(m.at(rank, col));
    for (std::size_t c = col; c < m.cols; ++c)
      m.at(rank, c) = f.mul(m.at(rank, c), scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || f.is_zero(m.at(r, col))) continue;
      const SmallField::Elem factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

unsigned long binomial_mod_p(unsigned long i, unsigned long l,
                             unsigned long p) {
  if (l > i) return 0;
  std::vector<unsigned long> row(i + 1, 0);
  row[0] = 1;
  for (unsigned long r = 1; r <= i; ++r)
    for (unsigned long c = std::min(r, l); c > 0; --c)
      row[c] = (row[c] + row[c - 1]) % p;
  return row[l] % p;
}

unsigned long lucas_binomial_mod_p(unsigned long i, unsigned long l,
                                   unsigned long p) {
  unsigned long acc = 1;
  while (i > 0 || l > 0) {
    const unsigned long id = i % p, ld = l % p;
    if (ld > id) return 0;
    // C(id, ld) with id, ld < p: small multiplicative form mod p
    unsigned long num = 1, den = 1;
    for (unsigned long t = 0; t < ld; ++t) {
      num = (num * ((id - t) % p)) % p;
      den = (den * ((t + 1) % p)) % p;
    }
    // invert den by Fermat in F_p
    unsigned long inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    acc = (acc * ((num * inv) % p)) % p;
    i /= p;
    l /= p;
  }
  return acc;
}

std::size_t jordan_kernel_dim(std::size_t k, std::size_t i, unsigned long p,
                              unsigned n) {
  if (k == 0) return 0;
  const SmallField f(p, n);
  ModMatrix nil(k, k, f);
  for (std::size_t r = 0; r + 1 < k; ++r) nil.at(r, r + 1) = f.one();
  ModMatrix power = identity_matrix(k, f);
  for (std::size_t t = 0; t < i; ++t) power = mat_mul(power, nil, f);
  return k - mat_rank(std::move(power), f);
}

ModMatrix wj_action_matrix(std::size_t j, const SmallField::Elem& a,
                           const SmallField& f) {
  ModMatrix m(j, j, f);
  std::vector<SmallField::Elem> apow(j, f.one());
  for (std::size_t t = 1; t < j; ++t) apow[t] = f.mul(apow[t - 1], a);
  std::vector<unsigned long> pascal(j, 0); // rolling row of C(i, .) mod p
  pascal[0] = 1;
  for (std::size_t i = 0; i < j; ++i) {
    if (i > 0) // advance the Pascal row in place, high to low
      for (std::size_t c = std::min(i, j - 1); c > 0; --c)
        pascal[c] = (pascal[c] + pascal[c - 1]) % f.p();
    for (std::size_t l = 0; l <= i; ++l) {
      if (pascal[l] == 0) continue;
      m.at(i, l) = f.mul(f.from_uint(pascal[l]), apow[i - l]);
    }
  }
  return m;
}

namespace {

/// The module generators of (F_q, +) over F_p: 1, e, ..., e^(n-1).
std::vector<SmallField::Elem> group_generators(const SmallField& f) {
  std::vector<SmallField::Elem> gens;
  SmallField::Elem cur = f.one();
  for (unsigned t = 0; t < f.n(); ++t) {
    gens.push_back(cur);
    cur = f.mul(cur, f.gen());
  }
  return gens;
}

} // namespace

std::size_t covariant_dim_oracle(std::size_t j, const SmallField& f) {
  const auto gens = group_generators(f);
  const ModMatrix id = identity_matrix(j, f);
  // Row r of M(a) - 1 holds the coordinates of (sigma_a - 1) w_r, so the
  // vertical stack's row space is I W_j.
  ModMatrix stack(j * gens.size(), j, f);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const ModMatrix m = wj_action_matrix(j, gens[g], f);
    for (std::size_t r = 0; r < j; ++r)
      for (std::size_t c = 0; c < j; ++c)
        stack.at(g * j + r, c) = f.sub(m.at(r, c), id.at(r, c));
  }
  return j - mat_rank(std::move(stack), f);
}

std::size_t fixed_space_dim(std::size_t j, const SmallField& f) {
  const auto gens = group_generators(f);
  const ModMatrix id = identity_matrix(j, f);
  // v is fixed iff v^T (M(a) - 1) = 0 for every generator: the fixed space
  // is the left kernel of the horizontal stack.
  ModMatrix stack(j, j * gens.size(), f);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const ModMatrix m = wj_action_matrix(j, gens[g], f);
    for (std::size_t r = 0; r < j; ++r)
      for (std::size_t c = 0; c < j; ++c)
        stack.at(r, g * j + c) = f.sub(m.at(r, c), id.at(r, c));
  }
  return j - mat_rank(std::move(stack), f);
}

unsigned covariant_dim_closed(const Int& j, const Int& p, unsigned n) {
  if (j < 1 || j > pow_int(p, n))
    throw std::out_of_range("covariant_dim_closed: j out of [1, p^n]");
  // theta_s survives in the covariant space iff no r in (s, j-1] has
  // C(r, s) != 0 mod p (the power functions a^t are linearly independent on
  // F_q, so the augmentation image is the coordinate span of the theta_s
  // that are hit).  Counting survivors digit by digit: scanning B = j-1 from
  // the low base-p digit, a digit p-1 passes through (survivors there carry
  // that digit), any smaller digit contributes one survivor and decrements
  // the remaining high part.
  Int b = j - 1;
  unsigned dim = 0;
  while (true) {
    if (b <= p - 2) return dim + 1;
    const Int digit = b % p;
    if (digit == p - 1) {
      b = (b - digit) / p;
    } else {
      ++dim;
      b = b / p - 1;
    }
  }
}

unsigned covariant_dim_piecewise(const Int& j, const Int& p, unsigned n) {
  if (j < 1 || j > pow_int(p, n))
    throw std::out_of_range("covariant_dim_piecewise: j out of [1, p^n]");
  if (j <= p) return 1;
  return j % p == 0 ? 1 : 2;
}

std::vector<OracleRow> oracle_sweep_serial(unsigned long p, unsigned n) {
  const SmallField f(p, n);
  std::vector<OracleRow> rows(f.order());
  for (std::size_t j = 1; j <= f.order(); ++j) {
    OracleRow& row = rows[j - 1];
    row.j = j;
    row.covariant_oracle = covariant_dim_oracle(j, f);
    row.covariant_closed =
        covariant_dim_closed(Int((unsigned long)j), Int(p), n);
    row.fixed_dim = fixed_space_dim(j, f);
  }
  return rows;
}

std::vector<OracleRow> oracle_sweep(unsigned long p, unsigned n) {
  const SmallField f(p, n);
  std::vector<OracleRow> rows(f.order());
  // Rows are independent; indexed writes keep the output deterministic.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long j = 1; j <= static_cast<long long>(f.order()); ++j) {
    OracleRow row;
    row.j = static_cast<std::size_t>(j);
    row.covariant_oracle = covariant_dim_oracle(row.j, f);
    row.covariant_closed =
        covariant_dim_closed(Int((unsigned long)row.j), Int(p), n);
    row.fixed_dim = fixed_space_dim(row.j, f);
    rows[row.j - 1] = row;
  }
  return rows;
}

} // namespace polydiff
