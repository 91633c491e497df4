// Modular-representation oracles: small prime-power fields, Jordan block
// kernels, and the additive-group action on the modules W_j.
#include <doctest.h>

#include <cstddef>
#include <vector>

#include "polydiff/modrep.hpp"

using namespace polydiff;

namespace {

SmallField::Elem elem_of(const SmallField& f, unsigned long v) {
  return f.from_uint(v);
}

bool matrices_equal(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("small field picks the first irreducible modulus") {
  // Modulus coefficients are stored constant term first.
  CHECK(SmallField(2, 1).modulus() == std::vector<unsigned long>{0, 1});
  CHECK(SmallField(3, 1).modulus() == std::vector<unsigned long>{0, 1});
  CHECK(SmallField(2, 2).modulus() == std::vector<unsigned long>{1, 1, 1});
  CHECK(SmallField(2, 3).modulus() == std::vector<unsigned long>{1, 1, 0, 1});
  CHECK(SmallField(3, 2).modulus() == std::vector<unsigned long>{1, 0, 1});
  CHECK(SmallField(5, 2).modulus() == std::vector<unsigned long>{2, 0, 1});
}

TEST_CASE("small field rejects bad parameters") {
  CHECK_THROWS_AS(SmallField(4, 1), ValidationError);
  CHECK_THROWS_AS(SmallField(2, 0), ValidationError);
  CHECK_THROWS_AS(SmallField(2, 15), UnsupportedError);  // 32768 > cap
}

TEST_CASE("field arithmetic in GF(4)") {
  SmallField f(2, 2);
  const auto e = f.gen();
  CHECK(f.to_uint(e) == 2);  // class of x
  // e^2 = e + 1 because the modulus is x^2 + x + 1.
  CHECK(f.mul(e, e) == f.add(e, f.one()));
  CHECK(f.add(e, e) == f.zero());
}

TEST_CASE("uint encoding round-trips and inverses multiply to one") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{
           {2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    SmallField f(p, n);
    const unsigned long q = f.order();
    for (unsigned long v = 0; v < q; ++v) {
      const auto a = f.from_uint(v);
      CHECK(f.to_uint(a) == v);
      if (v != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    CHECK_THROWS_AS(f.inv(f.zero()), InternalError);
  }
}

TEST_CASE("every element satisfies a^q = a") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{
           {2, 3}, {3, 2}}) {
    SmallField f(p, n);
    for (unsigned long v = 0; v < f.order(); ++v) {
      const auto a = f.from_uint(v);
      CHECK(f.pow(a, f.order()) == a);
    }
  }
}

TEST_CASE("field axioms hold exhaustively in GF(9)") {
  SmallField f(3, 2);
  const unsigned long q = f.order();
  for (unsigned long i = 0; i < q; ++i) {
    const auto a = f.from_uint(i);
    for (unsigned long j = 0; j < q; ++j) {
      const auto b = f.from_uint(j);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
      for (unsigned long k = 0; k < q; k += 4) {
        const auto c = f.from_uint(k);
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("rolling Pascal binomials agree with the Lucas evaluation") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
    for (unsigned long i = 0; i <= 60; ++i)
      for (unsigned long l = 0; l <= i; ++l)
        CHECK(binomial_mod_p(i, l, p) == lucas_binomial_mod_p(i, l, p));
  CHECK(binomial_mod_p(4, 2, 2) == 0);
  CHECK(binomial_mod_p(4, 2, 5) == 1);  // 6 mod 5
  // The row indexed by p is divisible by p away from the endpoints.
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
    for (unsigned long l = 1; l < p; ++l) CHECK(binomial_mod_p(p, l, p) == 0);
}

TEST_CASE("Jordan block power kernels have dimension min(i, k)") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{
           {2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    for (std::size_t k = 1; k <= 10; ++k)
      for (std::size_t i = 0; i <= 12; ++i)
        CHECK(jordan_kernel_dim(k, i, p, n) == std::min(i, k));
  }
}

TEST_CASE("action matrices are unitriangular and form a group") {
  SmallField f(2, 3);
  const std::size_t j = 5;
  const ModMatrix id = identity_matrix(j, f);
  CHECK(matrices_equal(wj_action_matrix(j, f.zero(), f), id));
  for (unsigned long u = 0; u < f.order(); ++u) {
    const auto a = elem_of(f, u);
    const ModMatrix ma = wj_action_matrix(j, a, f);
    for (std::size_t r = 0; r < j; ++r) {
      CHECK(ma.at(r, r) == f.one());
      for (std::size_t c = r + 1; c < j; ++c) CHECK(ma.at(r, c) == f.zero());
    }
    for (unsigned long v = 0; v < f.order(); ++v) {
      const auto b = elem_of(f, v);
      const ModMatrix prod = mat_mul(ma, wj_action_matrix(j, b, f), f);
      CHECK(matrices_equal(prod, wj_action_matrix(j, f.add(a, b), f)));
    }
  }
}

TEST_CASE("explicit action matrix over GF(4), j = 3") {
  SmallField f(2, 2);
  const auto e = f.gen();
  const ModMatrix m = wj_action_matrix(3, e, f);
  // Row i holds C(i, l) e^(i - l); C(2, 1) = 2 vanishes mod 2.
  CHECK(m.at(0, 0) == f.one());
  CHECK(m.at(1, 0) == e);
  CHECK(m.at(1, 1) == f.one());
  CHECK(m.at(2, 0) == f.mul(e, e));
  CHECK(m.at(2, 1) == f.zero());
  CHECK(m.at(2, 2) == f.one());
}

TEST_CASE("covariant dimensions match the closed form, fixed space is a line") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2},
           {7, 1}}) {
    SmallField f(p, n);
    for (std::size_t j = 1; j <= f.order(); ++j) {
      CHECK(covariant_dim_oracle(j, f) ==
            covariant_dim_closed(Int((long)j), Int((long)p), n));
      CHECK(fixed_space_dim(j, f) == 1);
    }
  }
}

TEST_CASE("frozen covariant dimensions for small fields") {
  SmallField f22(2, 2);
  std::vector<std::size_t> got;
  for (std::size_t j = 1; j <= 4; ++j) got.push_back(covariant_dim_oracle(j, f22));
  CHECK(got == std::vector<std::size_t>{1, 1, 2, 1});

  SmallField f32(3, 2);
  got.clear();
  for (std::size_t j = 1; j <= 9; ++j) got.push_back(covariant_dim_oracle(j, f32));
  CHECK(got == std::vector<std::size_t>{1, 1, 1, 2, 2, 1, 2, 2, 1});

  SmallField f23(2, 3);
  got.clear();
  for (std::size_t j = 1; j <= 8; ++j) got.push_back(covariant_dim_oracle(j, f23));
  CHECK(got == std::vector<std::size_t>{1, 1, 2, 1, 2, 2, 3, 1});
}

TEST_CASE("two-band description is exact for n <= 2 and undercounts beyond") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
    for (unsigned n : {1u, 2u}) {
      const Int q = pow_int(Int((long)p), n);
      for (Int j = 1; j <= q; ++j)
        CHECK(covariant_dim_closed(j, Int((long)p), n) ==
              covariant_dim_piecewise(j, Int((long)p), n));
    }
  // First failure of the two-band description: a third basis vector survives.
  CHECK(covariant_dim_piecewise(Int(7), Int(2), 3) == 2);
  CHECK(covariant_dim_closed(Int(7), Int(2), 3) == 3);
  CHECK(covariant_dim_oracle(7, SmallField(2, 3)) == 3);
}

TEST_CASE("closed form rejects j outside [1, p^n]") {
  CHECK_THROWS_AS(covariant_dim_closed(Int(0), Int(2), 2), std::out_of_range);
  CHECK_THROWS_AS(covariant_dim_closed(Int(5), Int(2), 2), std::out_of_range);
}

TEST_CASE("parallel oracle sweep matches the serial reference") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, unsigned>>{
           {2, 3}, {3, 2}}) {
    const auto par = oracle_sweep(p, n);
    const auto ser = oracle_sweep_serial(p, n);
    REQUIRE(par.size() == ser.size());
    for (std::size_t t = 0; t < par.size(); ++t) {
      CHECK(par[t].j == ser[t].j);
      CHECK(par[t].covariant_oracle == ser[t].covariant_oracle);
      CHECK(par[t].covariant_closed == ser[t].covariant_closed);
      CHECK(par[t].fixed_dim == ser[t].fixed_dim);
    }
  }
}
