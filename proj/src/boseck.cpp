#include "polydiff/boseck.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydiff {

namespace {

Rat make_rat(const Int& num, const Int& den) {
  return Rat(num) / Rat(den); // operator/ canonicalizes
}


} // namespace

Int different_exponent_cyclic(const CyclicPlace& place, const GroupParams& g) {
  // Authoritative form, summed over the ramified levels only.
  Int acc = 0;
  const unsigned first_ram = g.n - place.e; // 0-based
  for (unsigned j = first_ram; j < g.n; ++j)
    acc += (place.phi[j] + 1) * pow_int(g.p, g.n - 1 - j);
  Int delta = (g.p - 1) * acc;

  // Equivalent full-range form; the two agree exactly when phi vanishes
  // below the ramified range, so a disagreement means malformed input.
  Int acc2 = 0;
  for (unsigned j = 0; j < g.n; ++j)
    acc2 += place.phi[j] * pow_int(g.p, g.n - 1 - j);
  const Int delta2 = (g.p - 1) * acc2 + pow_int(g.p, place.e) - 1;
  if (delta != delta2)
    throw ValidationError(
        "cyclic jump vector is not in standard form "
        "(different-exponent forms disagree)");
  return delta;
}

Int different_exponent_elab(const ElabPlace& place, const GroupParams& g) {
  return (g.order() - 1) * (place.phi + 1);
}

Int different_exponent_tame(const TamePlace& place) { return place.e - 1; }

Int basis_weight_cyclic(const CyclicPlace& place, const GroupParams& g,
                        const Int& k) {
  if (place.phi.size() != g.n)
    throw ValidationError("jump vector length does not match n");
  const std::vector<Int> digits = p_adic_digits(k, g.p, g.n);
  Int w = 0;
  for (unsigned j = 0; j < g.n; ++j)
    w += digits[j] * place.phi[j] * pow_int(g.p, g.n - 1 - j);
  return w;
}

Int nu_generic(const Int& delta, unsigned long e, const Int& weight,
               const Int& p, unsigned long m) {
  if (m < 1) throw ValidationError("order m must be >= 1");
  return floor_div(delta * m + weight, pow_int(p, e));
}

Int nu_cyclic(const CyclicPlace& place, const GroupParams& g, const Int& k,
              unsigned long m) {
  const Int delta = different_exponent_cyclic(place, g);
  const Int w = basis_weight_cyclic(place, g, k);
  return nu_generic(delta, place.e, -w, g.p, m);
}

Int nu_elab(const ElabPlace& place, const GroupParams& g, const Int& k,
            unsigned long m) {
  if (m < 1) throw ValidationError("order m must be >= 1");
  if (k < 0 || k >= g.order())
    throw std::out_of_range("nu_elab: k out of [0, q)");
  const Int delta = different_exponent_elab(place, g);
  return floor_div(delta * m - k * place.phi, g.order());
}

Rat nu_tame(const TamePlace& place, const Int& n_deg, const Int& k) {
  if (k < 0 || k >= n_deg)
    throw std::out_of_range("nu_tame: k out of [0, N)");
  Int r;
  const Int kv = k * place.vu;
  mpz_fdiv_r(r.get_mpz_t(), kv.get_mpz_t(), n_deg.get_mpz_t());
  return make_rat(r, n_deg);
}

Rat nu(const ExtensionSpec& spec, std::size_t place_index, const Int& k,
       unsigned long m) {
  if (place_index >= place_count(spec))
    throw std::out_of_range("nu: place index out of range");
  if (k < 0 || k >= group_order(spec))
    throw std::out_of_range("nu: k out of [0, |G|)");
  return std::visit(
      [&](const auto& s) -> Rat {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>) {
          return Rat(nu_cyclic(s.places[place_index], s.group, k, m));
        } else if constexpr (std::is_same_v<T, ElabSpec>) {
          return Rat(nu_elab(s.places[place_index], s.group, k, m));
        } else {
          if (m != 1)
            throw UnsupportedError("tame covers support m = 1 only");
          return nu_tame(s.places[place_index], s.n_deg, k);
        }
      },
      spec);
}

Int places_above(const ExtensionSpec& spec, std::size_t place_index) {
  if (place_index >= place_count(spec))
    throw std::out_of_range("places_above: place index out of range");
  return std::visit(
      [&](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>)
          return pow_int(s.group.p, s.group.n - s.places[place_index].e);
        else if constexpr (std::is_same_v<T, ElabSpec>)
          return Int(1);
        else
          return s.n_deg / s.places[place_index].e;
      },
      spec);
}

Int deg_different(const ExtensionSpec& spec) {
  Int total = 0;
  return std::visit(
      [&](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        for (std::size_t i = 0; i < s.places.size(); ++i) {
          Int delta;
          if constexpr (std::is_same_v<T, CyclicTowerSpec>)
            delta = different_exponent_cyclic(s.places[i], s.group);
          else if constexpr (std::is_same_v<T, ElabSpec>)
            delta = different_exponent_elab(s.places[i], s.group);
          else
            delta = different_exponent_tame(s.places[i]);
          total += places_above(spec, i) * delta;
        }
        return total;
      },
      spec);
}

Int two_g_top_minus_two(const ExtensionSpec& spec) {
  return group_order(spec) * (2 * genus_base(spec) - 2) + deg_different(spec);
}

Int genus_top(const ExtensionSpec& spec) {
  const Int tg = two_g_top_minus_two(spec);
  if (tg % 2 != 0)
    throw RealizabilityError("2g-2 = " + tg.get_str() +
                             " is odd: the derived genus is fractional");
  return (tg + 2) / 2;
}

namespace {

// Per-place scalars hoisted out of the column loop.
struct PlacePrep {
  Int delta;
  Int pe;                  // p^(e_i), wild kinds
  std::vector<Int> wcoef;  // cyclic: phi(i,j) * p^(n-j) per level
  Int phi;                 // elab
  Int vu;                  // tame
};

struct TablePrep {
  Kind kind = Kind::Cyclic;
  Int p;
  unsigned n = 1;
  Int order;
  std::size_t q = 0;
  unsigned long m = 1;
  std::vector<PlacePrep> places;
};

TablePrep prepare(const ExtensionSpec& spec, unsigned long m) {
  TablePrep prep;
  prep.kind = kind_of(spec);
  prep.order = group_order(spec);
  prep.q = table_width(spec);
  prep.m = m;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TameKummerSpec>) {
          prep.p = s.char_p;
          prep.n = 1;
          for (const auto& pl : s.places) {
            PlacePrep pp;
            pp.delta = different_exponent_tame(pl);
            pp.vu = pl.vu;
            prep.places.push_back(std::move(pp));
          }
        } else {
          prep.p = s.group.p;
          prep.n = s.group.n;
          for (const auto& pl : s.places) {
            PlacePrep pp;
            if constexpr (std::is_same_v<T, CyclicTowerSpec>) {
              pp.delta = different_exponent_cyclic(pl, s.group);
              pp.pe = pow_int(s.group.p, pl.e);
              pp.wcoef.resize(s.group.n);
              for (unsigned j = 0; j < s.group.n; ++j)
                pp.wcoef[j] = pl.phi[j] * pow_int(s.group.p, s.group.n - 1 - j);
            } else {
              pp.delta = different_exponent_elab(pl, s.group);
              pp.pe = s.group.order();
              pp.phi = pl.phi;
            }
            prep.places.push_back(std::move(pp));
          }
        }
      },
      spec);
  return prep;
}

// Fills column k of the nu matrix from the hoisted scalars.
void fill_column(const TablePrep& prep, std::size_t k,
                 std::vector<std::vector<Rat>>& nu) {
  const Int kk(static_cast<unsigned long>(k));
  switch (prep.kind) {
    case Kind::Cyclic: {
      const std::vector<Int> digits = p_adic_digits(kk, prep.p, prep.n);
      for (std::size_t i = 0; i < prep.places.size(); ++i) {
        Int w = 0;
        for (unsigned j = 0; j < prep.n; ++j)
          if (digits[j] != 0) w += digits[j] * prep.places[i].wcoef[j];
        nu[i][k] = Rat(floor_div(prep.places[i].delta * prep.m - w,
                                 prep.places[i].pe));
      }
      break;
    }
    case Kind::Elab:
      for (std::size_t i = 0; i < prep.places.size(); ++i)
        nu[i][k] = Rat(floor_div(
            prep.places[i].delta * prep.m - kk * prep.places[i].phi,
            prep.places[i].pe));
      break;
    case Kind::Tame:
      for (std::size_t i = 0; i < prep.places.size(); ++i) {
        Int r;
        const Int kv = kk * prep.places[i].vu;
        mpz_fdiv_r(r.get_mpz_t(), kv.get_mpz_t(), prep.order.get_mpz_t());
        nu[i][k] = make_rat(r, prep.order);
      }
      break;
  }
}

void check_spec_and_m(const ExtensionSpec& spec, unsigned long m) {
  if (m < 1) throw ValidationError("order m must be >= 1");
  require_valid(spec);
  if (kind_of(spec) == Kind::Tame && m != 1)
    throw UnsupportedError("tame covers support m = 1 only");
}

// Column sums, exactness checks and derived fields shared by both builders.
BoseckTable finish_table(const ExtensionSpec& spec, unsigned long m,
                         std::vector<std::vector<Rat>> nu_rows,
                         std::vector<Int> delta) {
  BoseckTable t;
  t.kind = kind_of(spec);
  t.m = m;
  t.p = std::visit(
      [](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TameKummerSpec>) return s.char_p;
        else return s.group.p;
      },
      spec);
  t.width = group_order(spec);
  t.delta = std::move(delta);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        for (const auto& pl : s.places) {
          if constexpr (std::is_same_v<T, CyclicTowerSpec>)
            t.ram_index.push_back(pow_int(s.group.p, pl.e));
          else if constexpr (std::is_same_v<T, ElabSpec>)
            t.ram_index.push_back(s.group.order());
          else
            t.ram_index.push_back(pl.e);
        }
      },
      spec);
  t.nu = std::move(nu_rows);
  t.deg_diff = deg_different(spec);
  t.g_base = genus_base(spec);
  t.g_top = genus_top(spec);

  const std::size_t q = t.nu.empty() ? table_width(spec) : t.nu[0].size();
  t.gamma.resize(q);
  Rat gamma_sum = 0;
  for (std::size_t k = 0; k < q; ++k) {
    Rat col = 0;
    for (std::size_t i = 0; i < t.nu.size(); ++i) col += t.nu[i][k];
    if (col.get_den() != 1) {
      // Unreachable when require_valid passed: fractional column sums are
      // exactly the realizability failures validation already rejects.
      std::ostringstream os;
      os << "Gamma_" << k << "(m) = " << col.get_str()
         << " is not an integer";
      throw InternalError(os.str());
    }
    t.gamma[k] = col.get_num();
    gamma_sum += col;
  }

  // Exact column-sum identity: 2 * sum_k Gamma_k(m) == (2m-1) * deg Diff.
  const Rat lhs = Rat(2) * gamma_sum;
  const Rat rhs = Rat(Int(2 * Int(m) - 1) * t.deg_diff);
  if (lhs != rhs)
    throw InternalError("column-sum identity failed: 2*sum Gamma = " +
                        lhs.get_str() + " vs (2m-1)*degDiff = " +
                        rhs.get_str());

  // Elementary abelian genus has a closed form; re-derive and compare.
  if (t.kind == Kind::Elab) {
    const auto& s = std::get<ElabSpec>(spec);
    Int terms = -2;
    for (const auto& pl : s.places) terms += pl.phi + 1;
    const Int twice = (s.group.order() - 1) * terms;
    if (twice % 2 != 0)
      throw InternalError("elab closed-form genus is fractional");
    if (twice / 2 != t.g_top)
      throw InternalError("elab closed-form genus " + Int(twice / 2).get_str() +
                          " != Riemann-Hurwitz genus " + t.g_top.get_str());
  }
  return t;
}

std::vector<Int> collect_deltas(const ExtensionSpec& spec) {
  std::vector<Int> delta;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        for (const auto& pl : s.places) {
          if constexpr (std::is_same_v<T, CyclicTowerSpec>)
            delta.push_back(different_exponent_cyclic(pl, s.group));
          else if constexpr (std::is_same_v<T, ElabSpec>)
            delta.push_back(different_exponent_elab(pl, s.group));
          else
            delta.push_back(different_exponent_tame(pl));
        }
      },
      spec);
  return delta;
}

} // namespace

BoseckTable boseck_table_serial(const ExtensionSpec& spec, unsigned long m) {
  check_spec_and_m(spec, m);
  const std::size_t q = table_width(spec);
  const std::size_t s = place_count(spec);
  // Reference path: one scalar-op call per cell, no hoisting.  Slow and
  // obviously right; the kernel below is tested against it.
  std::vector<std::vector<Rat>> nu_rows(s, std::vector<Rat>(q));
  for (std::size_t k = 0; k < q; ++k) {
    const Int kk(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < s; ++i) nu_rows[i][k] = nu(spec, i, kk, m);
  }
  return finish_table(spec, m, std::move(nu_rows), collect_deltas(spec));
}

BoseckTable boseck_table(const ExtensionSpec& spec, unsigned long m) {
  check_spec_and_m(spec, m);
  const TablePrep prep = prepare(spec, m);
  const std::size_t q = prep.q;
  std::vector<std::vector<Rat>> nu_rows(prep.places.size(),
                                        std::vector<Rat>(q));
  // Columns are independent; each write lands at a distinct preallocated
  // index, so the result is identical under any schedule.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long k = 0; k < static_cast<long long>(q); ++k)
    fill_column(prep, static_cast<std::size_t>(k), nu_rows);
  return finish_table(spec, m, std::move(nu_rows), collect_deltas(spec));
}

} // namespace polydiff
