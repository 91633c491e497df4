#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "polydiff/basis.hpp"
#include "polydiff/decomp.hpp"

using namespace polydiff;

namespace {

Int expected_count(const ExtensionSpec& spec, unsigned long m) {
  const Int g = genus_top(spec);
  return m == 1 ? g : Int(2 * (long)m - 1) * (g - 1);
}

const BasisElement* find_elem(const std::vector<BasisElement>& basis,
                              long k, long nu_x) {
  for (const auto& e : basis)
    if (e.k == k && e.nu_x == nu_x) return &e;
  return nullptr;
}

} // namespace

TEST_CASE("basis sizes match the dimension of the space") {
  for (const auto& spec : {fixtures::elab_A(), fixtures::cyclic_A(),
                           fixtures::cyclic_B(), fixtures::cyclic_C()}) {
    for (unsigned long m : {1ul, 2ul, 3ul, 4ul}) {
      const auto basis = enumerate_basis(spec, m);
      CHECK(Int((unsigned long)basis.size()) == expected_count(spec, m));
      // and agrees with the decomposition's total dimension
      CHECK(Int((unsigned long)basis.size()) ==
            decompose(boseck_table(spec, m)).total_dim);
    }
  }
  for (const auto& spec : {fixtures::tame_D(), fixtures::tame_E()}) {
    const auto basis = enumerate_basis(spec, 1);
    CHECK(Int((unsigned long)basis.size()) == expected_count(spec, 1));
  }
}

TEST_CASE("basis elements carry the g_k exponents") {
  // fixture A, m = 2, k = 2: nu_i2(2) = 2 at both places
  const auto basis = enumerate_basis(fixtures::elab_A(), 2);
  const BasisElement* e = find_elem(basis, 2, 0);
  REQUIRE(e != nullptr);
  CHECK(e->g_exponents == std::vector<Int>{Int(2), Int(2)});

  // tame E, k = 5: floor(5 vu_i / 6) = (0, 1, 2, 4, 0)
  const auto tbasis = enumerate_basis(fixtures::tame_E(), 1);
  const BasisElement* t = find_elem(tbasis, 5, 0);
  REQUIRE(t != nullptr);
  CHECK(t->g_exponents ==
        std::vector<Int>{Int(0), Int(1), Int(2), Int(4), Int(0)});
}

TEST_CASE("divisor bookkeeping closes exactly (fixture A)") {
  const auto spec = fixtures::elab_A();
  const auto table = boseck_table(spec, 2);
  const auto basis = enumerate_basis(spec, 2);
  const BasisElement* e = find_elem(basis, 2, 0);
  REQUIRE(e != nullptr);
  const PlaceDivisor div = divisor_of_element(*e, spec, table);
  CHECK(div.ramified_coeffs == std::vector<Int>{Int(2), Int(2)});
  CHECK(div.places_above == std::vector<Int>{Int(1), Int(1)});
  CHECK(div.places_over_infinity == 3);
  CHECK(div.infinity_coeff == 0);
  CHECK(div.residual_degree == 8);
  CHECK(div.total_degree == 12); // m (2g-2) = 2*6
}

TEST_CASE("divisor bookkeeping closes exactly (fixture B)") {
  const auto spec = fixtures::cyclic_B();
  const auto table = boseck_table(spec, 2);
  const auto basis = enumerate_basis(spec, 2);
  const BasisElement* e = find_elem(basis, 1, 0);
  REQUIRE(e != nullptr);
  CHECK(e->g_exponents == std::vector<Int>{Int(3), Int(2)});
  const PlaceDivisor div = divisor_of_element(*e, spec, table);
  // place 0: (16 - 2) mod 4 = 2; place 1: (4 - 0) mod 2 = 0
  CHECK(div.ramified_coeffs == std::vector<Int>{Int(2), Int(0)});
  CHECK(div.places_above == std::vector<Int>{Int(1), Int(2)});
  CHECK(div.infinity_coeff == 1); // Gamma_1(2) - 4 = 1
  CHECK(div.residual_degree == 2);
  CHECK(div.total_degree == 8);
}

TEST_CASE("divisor coefficients at partially ramified places (fixture F)") {
  // Five places, delta = (82, 18, 28, 82, 48), ramification indices
  // (8, 4, 4, 8, 4).  For k = 0 the coefficient at place i is
  // m delta_i mod ram_index_i, and the account closes with residual 0.
  const auto spec = fixtures::cyclic_F();
  {
    const auto table = boseck_table(spec, 1);
    // Gamma_0(1) = 10 + 4 + 7 + 10 + 12 = 43
    CHECK(table.gamma[0] == 43);
    const auto basis = enumerate_basis(spec, 1);
    const BasisElement* e = find_elem(basis, 0, 0);
    REQUIRE(e != nullptr);
    const PlaceDivisor div = divisor_of_element(*e, spec, table);
    CHECK(div.ramified_coeffs ==
          std::vector<Int>{Int(2), Int(2), Int(0), Int(2), Int(0)});
    CHECK(div.places_above ==
          std::vector<Int>{Int(1), Int(2), Int(2), Int(1), Int(2)});
    CHECK(div.infinity_coeff == 41); // Gamma_0(1) - 2
    CHECK(div.residual_degree == 0);
    CHECK(div.total_degree == 336); // 2 g_F - 2
  }
  {
    const auto table = boseck_table(spec, 3);
    // Gamma_0(3) = 30 + 13 + 21 + 30 + 36 = 130
    CHECK(table.gamma[0] == 130);
    const auto basis = enumerate_basis(spec, 3);
    const BasisElement* e = find_elem(basis, 0, 0);
    REQUIRE(e != nullptr);
    const PlaceDivisor div = divisor_of_element(*e, spec, table);
    CHECK(div.ramified_coeffs ==
          std::vector<Int>{Int(6), Int(2), Int(0), Int(6), Int(0)});
    CHECK(div.infinity_coeff == 124); // Gamma_0(3) - 6
    CHECK(div.residual_degree == 0);
    CHECK(div.total_degree == 1008);
  }
  // every enumerated element is holomorphic at every order
  for (unsigned long m = 1; m <= 3; ++m) {
    const auto table = boseck_table(spec, m);
    for (const auto& e : enumerate_basis(spec, m)) {
      const auto check = verify_holomorphic(e, spec, table);
      INFO("m=", m, " k=", e.k.get_str(), " nu_x=", e.nu_x.get_str(), ": ",
           check.diagnostics);
      CHECK(check.holomorphic);
    }
  }
}

TEST_CASE("divisor bookkeeping closes exactly (tame fixtures)") {
  const auto spec = fixtures::tame_E();
  const auto table = boseck_table(spec, 1);
  BasisElement e;
  e.kind = Kind::Tame;
  e.m = 1;
  e.k = 5;
  e.nu_x = 1;
  e.g_exponents = {Int(0), Int(1), Int(2), Int(4), Int(0)};
  const PlaceDivisor div = divisor_of_element(e, spec, table);
  // e_i - 1 - (5 phi_i mod e_i) over e = (6,3,2,6,6), phi = (1,1,1,5,1)
  CHECK(div.ramified_coeffs ==
        std::vector<Int>{Int(0), Int(0), Int(0), Int(4), Int(0)});
  CHECK(div.places_above ==
        std::vector<Int>{Int(1), Int(2), Int(3), Int(1), Int(1)});
  CHECK(div.infinity_coeff == 0); // Gamma_5 - 2 - 1
  CHECK(div.residual_degree == 6); // nu_x * N: div(x) zeros at x = 0
  CHECK(div.total_degree == 10);

  // hyperelliptic: k = 1, nu_x = 0 pins every coefficient to 0 or 1
  const auto dspec = fixtures::tame_D();
  const auto dtable = boseck_table(dspec, 1);
  const auto dbasis = enumerate_basis(dspec, 1);
  const BasisElement* d0 = find_elem(dbasis, 1, 0);
  REQUIRE(d0 != nullptr);
  const PlaceDivisor ddiv = divisor_of_element(*d0, dspec, dtable);
  for (const auto& c : ddiv.ramified_coeffs) CHECK(c == 0);
  CHECK(ddiv.infinity_coeff == 1);
  CHECK(ddiv.residual_degree == 0);
  CHECK(ddiv.total_degree == 2);
}

TEST_CASE("every enumerated element is holomorphic") {
  for (const auto& spec : {fixtures::elab_A(), fixtures::cyclic_B(),
                           fixtures::cyclic_C(), fixtures::tame_D(),
                           fixtures::tame_E()}) {
    const unsigned long mmax = kind_of(spec) == Kind::Tame ? 1 : 3;
    for (unsigned long m = 1; m <= mmax; ++m) {
      const auto table = boseck_table(spec, m);
      for (const auto& e : enumerate_basis(spec, m)) {
        const auto check = verify_holomorphic(e, spec, table);
        INFO("k=", e.k.get_str(), " nu_x=", e.nu_x.get_str(), ": ",
             check.diagnostics);
        CHECK(check.holomorphic);
      }
    }
  }
}

TEST_CASE("boundary perturbations fail the holomorphy check") {
  for (const auto& spec : {fixtures::elab_A(), fixtures::cyclic_B(),
                           fixtures::tame_E()}) {
    const unsigned long m = kind_of(spec) == Kind::Tame ? 1 : 2;
    const auto table = boseck_table(spec, m);
    const auto basis = enumerate_basis(spec, m);
    // per k, the element with maximal nu_x must break when pushed one up
    std::map<long, BasisElement> tops;
    for (const auto& e : basis) {
      const long k = e.k.get_si();
      auto it = tops.find(k);
      if (it == tops.end() || it->second.nu_x < e.nu_x) tops[k] = e;
    }
    REQUIRE(!tops.empty());
    for (auto& [k, e] : tops) {
      e.nu_x += 1;
      const auto check = verify_holomorphic(e, spec, table);
      CHECK_FALSE(check.holomorphic);
      CHECK(check.diagnostics.find("infinity") != std::string::npos);
    }
  }
}

TEST_CASE("negative nu_x is rejected") {
  const auto spec = fixtures::elab_A();
  const auto table = boseck_table(spec, 2);
  BasisElement e;
  e.kind = Kind::Elab;
  e.m = 2;
  e.k = 0;
  e.nu_x = -1;
  e.g_exponents = {Int(4), Int(4)};
  const auto check = verify_holomorphic(e, spec, table);
  CHECK_FALSE(check.holomorphic);
  CHECK(check.diagnostics.find("nu_x") != std::string::npos);
}

TEST_CASE("tame k = 0 is not a basis index") {
  const auto spec = fixtures::tame_D();
  const auto table = boseck_table(spec, 1);
  BasisElement e;
  e.kind = Kind::Tame;
  e.m = 1;
  e.k = 0;
  e.nu_x = 0;
  e.g_exponents = {Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)};
  CHECK_FALSE(verify_holomorphic(e, spec, table).holomorphic);
  // and enumerate_basis never emits it
  for (const auto& b : enumerate_basis(spec, 1)) CHECK(b.k >= 1);
}

TEST_CASE("bases outside the supported surface are refused") {
  CyclicTowerSpec s = std::get<CyclicTowerSpec>(fixtures::cyclic_B());
  s.g_base = 1;
  CHECK_THROWS_AS(enumerate_basis(ExtensionSpec(s), 2), UnsupportedError);
  CHECK_THROWS_AS(enumerate_basis(fixtures::tame_D(), 2), UnsupportedError);
}
