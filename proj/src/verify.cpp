#include "polydiff/verify.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <variant>

#include "polydiff/basis.hpp"
#include "polydiff/boseck.hpp"
#include "polydiff/decomp.hpp"
#include "polydiff/deform.hpp"
#include "polydiff/json_io.hpp"

namespace polydiff {

namespace {

std::string eq_detail(const char* lhs_name, const Int& lhs,
                      const char* rhs_name, const Int& rhs) {
  return std::string(lhs_name) + " = " + lhs.get_str() + " but " + rhs_name +
         " = " + rhs.get_str();
}

/// Builds the elementary abelian twin of a height-1 tower over the
/// rational base, or the tower twin of a rank-1 elementary abelian cover.
ExtensionSpec n1_twin(const ExtensionSpec& spec) {
  if (const auto* c = std::get_if<CyclicTowerSpec>(&spec)) {
    ElabSpec e;
    e.group = c->group;
    for (const CyclicPlace& pl : c->places)
      e.places.push_back(ElabPlace{pl.phi.at(0)});
    return e;
  }
  const auto& e = std::get<ElabSpec>(spec);
  CyclicTowerSpec c;
  c.group = e.group;
  c.g_base = 0;
  for (const ElabPlace& pl : e.places)
    c.places.push_back(CyclicPlace{1, {pl.phi}});
  return c;
}

/// True when deform_report accepts the spec: one ramified place over a
/// rational base, totally ramified, of a wild kind.
bool deform_applicable(const ExtensionSpec& spec) {
  if (const auto* c = std::get_if<CyclicTowerSpec>(&spec))
    return c->places.size() == 1 && c->g_base == 0 &&
           c->places[0].e == c->group.n;
  if (const auto* e = std::get_if<ElabSpec>(&spec))
    return e->places.size() == 1;
  return false;
}

} // namespace

std::vector<CheckResult> identity_suite(const ExtensionSpec& spec,
                                        unsigned long m) {
  const BoseckTable table = boseck_table(spec, m);

  std::vector<CheckResult> out;
  const auto run = [&out](const char* name,
                          const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    r.pass = true;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };
  const Int two_m_minus_1 = 2 * Int(m) - 1;

  run("column-sum", [&](CheckResult& r) {
    Int sum = 0;
    for (const Int& g : table.gamma) sum += g;
    const Int lhs = 2 * sum;
    const Int rhs = two_m_minus_1 * table.deg_diff;
    if (lhs != rhs) {
      r.pass = false;
      r.detail = eq_detail("2*sum Gamma", lhs, "(2m-1)*degDifferent", rhs);
    }
  });

  run("place-sum", [&](CheckResult& r) {
    for (std::size_t i = 0; i < table.nu.size(); ++i) {
      Rat sum = 0;
      for (const Rat& v : table.nu[i]) sum += v;
      const Rat lhs = Rat(2) * sum;
      const Int rhs_int = two_m_minus_1 * places_above(spec, i) * table.delta[i];
      const Rat rhs(rhs_int);
      if (lhs != rhs) {
        r.pass = false;
        r.detail = "place " + std::to_string(i) + ": 2*sum nu = " +
                   lhs.get_str() + " but (2m-1)*places*delta = " +
                   rhs.get_str();
        return;
      }
    }
  });

  run("riemann-hurwitz", [&](CheckResult& r) {
    const Int lhs = 2 * table.g_top - 2;
    const Int rhs = table.width * (2 * table.g_base - 2) + table.deg_diff;
    if (lhs != rhs) {
      r.pass = false;
      r.detail = eq_detail("2g-2", lhs, "|G|(2g_base-2) + degDifferent", rhs);
    }
  });

  run("decomposition", [&](CheckResult& r) {
    const Decomposition d = decompose(table); // throws on negative d_k
    Int total = 0;
    for (std::size_t j = 0; j < d.d.size(); ++j) {
      if (d.d[j] < 0) {
        r.pass = false;
        r.detail = "d_" + std::to_string(j) + " = " + d.d[j].get_str() +
                   " is negative";
        return;
      }
      total += d.d[j] * (d.kind == Kind::Tame ? Int(1) : Int(j + 1));
    }
    if (total != d.total_dim) {
      r.pass = false;
      r.detail = eq_detail("sum of dim*multiplicity", total,
                           "reported total_dim", d.total_dim);
      return;
    }
    Int expected = table.g_top;
    if (m >= 2) expected = two_m_minus_1 * (table.g_top - 1);
    if (total != expected) {
      r.pass = false;
      r.detail = eq_detail("decomposition dimension", total,
                           m >= 2 ? "(2m-1)(g-1)" : "g", expected);
    }
  });

  run("serial-parallel", [&](CheckResult& r) {
    const BoseckTable ref = boseck_table_serial(spec, m);
    if (table.nu != ref.nu || table.gamma != ref.gamma ||
        table.delta != ref.delta || table.ram_index != ref.ram_index ||
        table.deg_diff != ref.deg_diff || table.g_top != ref.g_top) {
      r.pass = false;
      r.detail = "OpenMP table differs from the serial reference";
    }
  });

  run("roundtrip", [&](CheckResult& r) {
    const SpecDocument doc = parse_spec_document(spec_to_json(spec).dump());
    if (!(doc.spec == spec)) {
      r.pass = false;
      r.detail = "spec -> JSON -> spec changed the spec";
    }
  });

  run("n1-coincidence", [&](CheckResult& r) {
    const Kind kind = kind_of(spec);
    if (kind == Kind::Tame) {
      r.detail = "skipped: tame covers have no wild twin";
      return;
    }
    const auto* c = std::get_if<CyclicTowerSpec>(&spec);
    if ((c ? c->group.n : std::get<ElabSpec>(spec).group.n) != 1) {
      r.detail = "skipped: only height-1 data has a twin description";
      return;
    }
    if (c && c->g_base != 0) {
      r.detail = "skipped: the twin model needs a rational base";
      return;
    }
    const ExtensionSpec twin = n1_twin(spec);
    const BoseckTable other = boseck_table(twin, m);
    if (table.nu != other.nu || table.gamma != other.gamma ||
        table.delta != other.delta) {
      r.pass = false;
      r.detail = "height-1 tower and elementary abelian tables differ";
      return;
    }
    const Decomposition da = decompose(table);
    const Decomposition db = decompose(other);
    if (da.d != db.d || da.total_dim != db.total_dim) {
      r.pass = false;
      r.detail = "twin decompositions differ";
      return;
    }
    if (deform_applicable(spec)) {
      const DeformReport ra = deform_report(spec);
      const DeformReport rb = deform_report(twin);
      if (ra.covariant_total != rb.covariant_total ||
          ra.h1_quotient != rb.h1_quotient || ra.h1_local != rb.h1_local) {
        r.pass = false;
        r.detail = "twin deformation reports differ";
      }
    }
  });

  run("basis", [&](CheckResult& r) {
    const Int g_base = std::visit(
        [](const auto& s) -> Int {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ElabSpec>) {
            (void)s;
            return 0;
          } else {
            return s.g_base;
          }
        },
        spec);
    if (g_base != 0) {
      r.detail = "skipped: the symbolic basis needs a rational base";
      return;
    }
    const std::vector<BasisElement> elems = enumerate_basis(spec, m);
    const Decomposition d = decompose(table);
    if (Int(elems.size()) != d.total_dim) {
      r.pass = false;
      r.detail = eq_detail("basis size", Int(elems.size()),
                           "decomposition dimension", d.total_dim);
      return;
    }
    for (const BasisElement& e : elems) {
      const HolomorphyCheck check = verify_holomorphic(e, spec, table);
      if (!check.holomorphic) {
        r.pass = false;
        r.detail = "element (k = " + e.k.get_str() + ", nu_x = " +
                   e.nu_x.get_str() + ") fails: " + check.diagnostics;
        return;
      }
    }
  });

  run("deform", [&](CheckResult& r) {
    if (!deform_applicable(spec)) {
      r.detail =
          "skipped: needs one totally ramified place of a wild kind over "
          "a rational base";
      return;
    }
    const DeformReport rep = deform_report(spec);
    if (rep.h1_local != rep.covariant_total - rep.h1_quotient) {
      r.pass = false;
      r.detail = eq_detail("h1_local", rep.h1_local,
                           "covariant_total - h1_quotient",
                           rep.covariant_total - rep.h1_quotient);
      return;
    }
    if (rep.h1_quotient < 0 || rep.h1_local < 0) {
      r.pass = false;
      r.detail = "negative block: h1_quotient = " + rep.h1_quotient.get_str() +
                 ", h1_local = " + rep.h1_local.get_str();
    }
  });

  return out;
}

// ---------------------------------------------------------------------------
// Seeded generation.
// ---------------------------------------------------------------------------

SpecGenerator::SpecGenerator(unsigned long seed) : eng_(seed) {}

unsigned long SpecGenerator::pick(unsigned long lo, unsigned long hi) {
  // Modulo reduction is slightly biased; determinism, not uniformity, is
  // what the sweep needs.
  return lo + static_cast<unsigned long>(eng_() % (hi - lo + 1));
}

ExtensionSpec SpecGenerator::gen_cyclic() {
  static const unsigned long primes[] = {2, 3, 5, 7};
  const unsigned long p = primes[pick(0, 3)];
  // Jumps are capped at 50, which bounds the reachable tower height:
  // the minimal height-3 chain needs jump 1 + p(p-1) + p^2(p^2 - p) > 50
  // for p >= 3.
  const unsigned long max_n = p == 2 ? 3 : 2;
  const unsigned n = static_cast<unsigned>(pick(1, max_n));
  CyclicTowerSpec s;
  s.group = GroupParams{Int(p), n};
  static const unsigned long genus_weights[] = {0, 0, 0, 1, 2};
  s.g_base = Int(genus_weights[pick(0, 4)]);

  const unsigned long r = pick(1, 5);
  for (unsigned long i = 0; i < r; ++i) {
    // The first place is totally ramified so every order m is supported.
    const unsigned e = i == 0 ? n : static_cast<unsigned>(pick(1, n));
    std::vector<unsigned long> upper(e);
    for (int attempt = 0;; ++attempt) {
      upper[0] = pick(1, 9);
      if (upper[0] % p == 0) ++upper[0];
      for (unsigned t = 1; t < e; ++t) {
        if (pick(0, 1) == 0) {
          upper[t] = p * upper[t - 1];
        } else {
          unsigned long d = pick(1, 5);
          if (d % p == 0) ++d;
          upper[t] = p * upper[t - 1] + d;
        }
      }
      // Convert the upper chain to lower jumps and enforce the cap.
      unsigned long jump = upper[0];
      unsigned long pw = 1;
      bool ok = true;
      for (unsigned t = 1; t < e; ++t) {
        pw *= p;
        jump += pw * (upper[t] - upper[t - 1]);
        if (jump > 50) ok = false;
      }
      if (ok && jump <= 50) break;
      if (attempt >= 20) {
        // Minimal admissible chain: upper breaks 1, p, p^2, ...
        upper[0] = 1;
        for (unsigned t = 1; t < e; ++t) upper[t] = p * upper[t - 1];
        break;
      }
    }
    CyclicPlace place;
    place.e = e;
    place.phi.assign(n, Int(0));
    Int jump = Int(upper[0]);
    Int pw = 1;
    place.phi[n - e] = jump;
    for (unsigned t = 1; t < e; ++t) {
      pw *= Int(p);
      jump += pw * Int(upper[t] - upper[t - 1]);
      place.phi[n - e + t] = jump;
    }
    s.places.push_back(std::move(place));
  }
  return s;
}

ExtensionSpec SpecGenerator::gen_elab() {
  static const unsigned long primes[] = {2, 3, 5, 7};
  ElabSpec s;
  const unsigned long p = primes[pick(0, 3)];
  s.group = GroupParams{Int(p), static_cast<unsigned>(pick(1, 3))};
  const unsigned long r = pick(1, 5);
  for (unsigned long i = 0; i < r; ++i) {
    unsigned long phi = pick(1, 49);
    if (phi % p == 0) ++phi;
    s.places.push_back(ElabPlace{Int(phi)});
  }
  return s;
}

ExtensionSpec SpecGenerator::gen_tame() {
  static const unsigned long primes[] = {2, 3, 5, 7};
  TameKummerSpec s;
  const unsigned long p = primes[pick(0, 3)];
  s.char_p = Int(p);
  unsigned long n_deg = pick(2, 9);
  while (n_deg % p == 0) n_deg = n_deg == 9 ? 2 : n_deg + 1;
  s.n_deg = Int(n_deg);
  // Small orders need more branch data or a positive-genus base to reach
  // g >= 2 within five places, so weight the base genus upward.
  static const unsigned long genus_weights[] = {0, 0, 1, 1, 2};
  s.g_base = Int(genus_weights[pick(0, 4)]);

  const unsigned long r = pick(2, 5);
  unsigned long sum = 0;
  for (unsigned long i = 0; i + 1 < r; ++i) {
    const unsigned long vu = pick(1, n_deg - 1);
    sum += vu;
    s.places.push_back(TamePlace::from_valuation(Int(vu), s.n_deg));
  }
  const unsigned long last = (n_deg - sum % n_deg) % n_deg;
  if (last != 0)
    s.places.push_back(TamePlace::from_valuation(Int(last), s.n_deg));
  return s;
}

ExtensionSpec SpecGenerator::next() {
  const unsigned long kind_index = counter_ % 3;
  ++counter_;
  for (int attempt = 0; attempt < 400; ++attempt) {
    ExtensionSpec candidate = kind_index == 0   ? gen_cyclic()
                              : kind_index == 1 ? gen_elab()
                                                : gen_tame();
    const ValidationReport rep = validate_spec(candidate, /*strict=*/true);
    if (rep.violations.empty() && rep.realizability.empty())
      return candidate;
  }
  throw InternalError("spec generation failed to converge");
}

// ---------------------------------------------------------------------------
// Sweep driver.
// ---------------------------------------------------------------------------

SweepOutcome run_verify_sweep(const SweepOptions& options) {
  if (options.m_lo < 1 || options.m_lo > options.m_hi)
    throw ValidationError("sweep needs 1 <= m_lo <= m_hi");
  SweepOutcome out;
  std::ostringstream report;
  report << "polydiff verify sweep: seed=" << options.seed
         << " count=" << options.count << " m=" << options.m_lo << ".."
         << options.m_hi << "\n";

  SpecGenerator gen(options.seed);
  for (unsigned long i = 0; i < options.count; ++i) {
    const ExtensionSpec spec = gen.next();
    ++out.specs;
    const bool tame = kind_of(spec) == Kind::Tame;
    const unsigned long m_hi = tame ? 1 : options.m_hi;
    for (unsigned long m = tame ? 1 : options.m_lo; m <= m_hi; ++m) {
      ++out.instances;
      std::vector<CheckResult> results;
      try {
        results = identity_suite(spec, m);
      } catch (const std::exception& e) {
        // Generated specs pre-validate, so a table-build failure is
        // itself a finding.
        ++out.checks;
        ++out.failures;
        report << "[FAIL] spec " << i << " (" << kind_name(kind_of(spec))
               << ", m=" << m << ") table build: " << e.what() << "\n";
        report << "       spec: " << spec_to_json(spec).dump() << "\n";
        continue;
      }
      for (const CheckResult& r : results) {
        ++out.checks;
        if (r.pass) continue;
        ++out.failures;
        report << "[FAIL] spec " << i << " (" << kind_name(kind_of(spec))
               << ", m=" << m << ") check " << r.name << ": " << r.detail
               << "\n";
        report << "       spec: " << spec_to_json(spec).dump() << "\n";
      }
    }
  }

  report << "specs: " << out.specs << ", instances: " << out.instances
         << ", checks: " << out.checks << ", failures: " << out.failures
         << "\n";
  report << "result: " << (out.failures == 0 ? "PASS" : "FAIL") << "\n";
  out.report = report.str();
  return out;
}

} // namespace polydiff
