#include "polydiff/basis.hpp"

#include <sstream>

namespace polydiff {

namespace {

Int mod_pos(const Int& a, const Int& module) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), module.get_mpz_t());
  return r;
}

/// w_k(i): the valuation weight of the k-th character generator at listed
/// place i (wild kinds only).
Int weight_at(const ExtensionSpec& spec, std::size_t i, const Int& k) {
  return std::visit(
      [&](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>)
          return basis_weight_cyclic(s.places[i], s.group, k);
        else if constexpr (std::is_same_v<T, ElabSpec>)
          return k * s.places[i].phi;
        else
          throw InternalError("weight_at: tame places have no weight");
      },
      spec);
}

void check_pair(const BasisElement& elem, const ExtensionSpec& spec,
                const BoseckTable& table) {
  if (elem.m != table.m || elem.kind != table.kind)
    throw InternalError("element does not belong to this table");
  if (kind_of(spec) != table.kind ||
      place_count(spec) != table.delta.size())
    throw InternalError("spec does not belong to this table");
  if (elem.k < 0 || elem.k >= table.width)
    throw std::out_of_range("basis element k out of [0, |G|)");
}

} // namespace

std::vector<BasisElement> enumerate_basis(const ExtensionSpec& spec,
                                          unsigned long m) {
  require_valid(spec);
  if (genus_base(spec) != 0)
    throw UnsupportedError(
        "symbolic bases are implemented over the rational base only");
  const Kind kind = kind_of(spec);
  if (kind == Kind::Tame && m != 1)
    throw UnsupportedError("tame covers support m = 1 only");

  const BoseckTable table = boseck_table(spec, m);
  const std::size_t q = table.gamma.size();
  const Int two_m(2 * static_cast<long>(m));

  // Wild, m = 1: the top character carries no holomorphic sections (its
  // Gamma vanishes), so k stops at q-2.  Tame bases start at k = 1.
  std::size_t k_begin = 0, k_end = q;
  if (kind == Kind::Tame)
    k_begin = 1;
  else if (m == 1)
    k_end = q - 1;

  std::vector<BasisElement> out;
  for (std::size_t k = k_begin; k < k_end; ++k) {
    const Int top = table.gamma[k] - two_m; // max nu_x
    if (top < 0) continue;
    std::vector<Int> g_exp(place_count(spec));
    for (std::size_t i = 0; i < g_exp.size(); ++i) {
      if (kind == Kind::Tame) {
        const auto& s = std::get<TameKummerSpec>(spec);
        g_exp[i] = floor_div(Int(static_cast<unsigned long>(k)) *
                                 s.places[i].vu,
                             s.n_deg);
      } else {
        // integral for wild kinds by construction
        g_exp[i] = table.nu[i][k].get_num();
      }
    }
    for (Int v = 0; v <= top; ++v) {
      BasisElement elem;
      elem.kind = kind;
      elem.m = m;
      elem.k = Int(static_cast<unsigned long>(k));
      elem.nu_x = v;
      elem.g_exponents = g_exp;
      out.push_back(std::move(elem));
    }
  }
  return out;
}

PlaceDivisor divisor_of_element(const BasisElement& elem,
                                const ExtensionSpec& spec,
                                const BoseckTable& table) {
  check_pair(elem, spec, table);
  const std::size_t s = place_count(spec);
  const unsigned long k_ul = checked_ulong(elem.k, "basis index k");
  const Int two_m(2 * static_cast<long>(elem.m));
  const Int gamma_k = table.gamma[static_cast<std::size_t>(k_ul)];

  PlaceDivisor div;
  div.ramified_coeffs.resize(s);
  div.places_above.resize(s);
  for (std::size_t i = 0; i < s; ++i)
    div.places_above[i] = places_above(spec, i);

  if (table.kind == Kind::Tame) {
    const auto& ts = std::get<TameKummerSpec>(spec);
    for (std::size_t i = 0; i < s; ++i) {
      const auto& pl = ts.places[i];
      // e_i - 1 - (k phi_i mod e_i)
      div.ramified_coeffs[i] = pl.e - 1 - mod_pos(elem.k * pl.phi, pl.e);
    }
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      const Int w = weight_at(spec, i, elem.k);
      // Each place above i has ramification index ram_index[i]; delta[i]
      // and w are local orders there, so the coefficient is the remainder
      // of (m delta_i - w) modulo that index.
      div.ramified_coeffs[i] =
          mod_pos(table.delta[i] * elem.m - w, table.ram_index[i]);
    }
  }

  div.places_over_infinity = table.width;
  div.infinity_coeff = gamma_k - two_m - elem.nu_x;
  div.total_degree = Int(elem.m) * (2 * table.g_top - 2);

  Int accounted = div.places_over_infinity * div.infinity_coeff;
  for (std::size_t i = 0; i < s; ++i)
    accounted += div.places_above[i] * div.ramified_coeffs[i];
  div.residual_degree = div.total_degree - accounted;
  return div;
}

HolomorphyCheck verify_holomorphic(const BasisElement& elem,
                                   const ExtensionSpec& spec,
                                   const BoseckTable& table) {
  HolomorphyCheck check;
  std::ostringstream why;
  if (elem.nu_x < 0) why << "nu_x = " << elem.nu_x.get_str() << " < 0; ";

  const PlaceDivisor div = divisor_of_element(elem, spec, table);
  for (std::size_t i = 0; i < div.ramified_coeffs.size(); ++i)
    if (div.ramified_coeffs[i] < 0)
      why << "coefficient " << div.ramified_coeffs[i].get_str()
          << " at place " << i << "; ";
  if (div.infinity_coeff < 0)
    why << "coefficient " << div.infinity_coeff.get_str()
        << " over infinity (nu_x exceeds Gamma_k(m) - 2m); ";
  if (div.residual_degree < 0)
    why << "residual degree " << div.residual_degree.get_str() << " < 0; ";
  if (table.kind == Kind::Tame && elem.k == 0)
    why << "tame bases use 1 <= k <= N-1; ";

  check.diagnostics = why.str();
  if (!check.diagnostics.empty()) check.diagnostics.pop_back(); // drop ' '
  check.holomorphic = check.diagnostics.empty();
  return check;
}

} // namespace polydiff
