// polydiff: exact Galois-module invariants of holomorphic m-differentials
// on cyclic-tower, elementary abelian, and tame cyclic covers.
//
// Exit codes:
//   0  success
//   1  generic failure (I/O, JSON syntax, usage, failed verify checks)
//   2  the spec is invalid (shape or derived-genus violations)
//   3  the spec is well-formed but not realizable
//   4  the request is outside the supported range

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polydiff/basis.hpp"
#include "polydiff/boseck.hpp"
#include "polydiff/decomp.hpp"
#include "polydiff/deform.hpp"
#include "polydiff/json_io.hpp"
#include "polydiff/modrep.hpp"
#include "polydiff/verify.hpp"

namespace {

using namespace polydiff;

struct CommonOpts {
  std::string spec_path;
  std::string m_text;
  std::string format = "json";
  bool strict = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpecDocument load_spec(const CommonOpts& o) {
  SpecDocument doc = parse_spec_document(read_file(o.spec_path));
  if (o.strict) require_valid(doc.spec, /*strict=*/true);
  return doc;
}

/// "3" -> {3}; "1..4" -> {1,2,3,4}.  The range is inclusive and bounded.
std::vector<unsigned long> parse_m_range(const std::string& text) {
  const auto parse_one = [&](const std::string& part) -> unsigned long {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size() || part.empty()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("--m: '" + text +
                            "' is not an order or a lo..hi range");
    }
  };
  const std::size_t dots = text.find("..");
  unsigned long lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_one(text);
  } else {
    lo = parse_one(text.substr(0, dots));
    hi = parse_one(text.substr(dots + 2));
  }
  if (lo < 1) throw ValidationError("--m: orders start at 1");
  if (lo > hi) throw ValidationError("--m: range is empty");
  if (hi - lo >= 1000) throw ValidationError("--m: range too large");
  std::vector<unsigned long> out;
  for (unsigned long m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

/// Orders to run: --m wins, then the file's "m", then 1.
std::vector<unsigned long> resolve_m(const CommonOpts& o,
                                     const SpecDocument& doc) {
  if (!o.m_text.empty()) return parse_m_range(o.m_text);
  if (doc.m) return {*doc.m};
  return {1};
}

/// One rendered block per order.  With several orders, JSON output becomes
/// one compact document per line (JSON Lines); a single order stays
/// pretty-printed.
template <typename RenderOne, typename JsonOne>
std::string render_per_m(const CommonOpts& o, const SpecDocument& doc,
                         const RenderOne& render_one, const JsonOne& json_one) {
  const std::vector<unsigned long> ms = resolve_m(o, doc);
  const OutputFormat f = parse_format(o.format);
  std::string out;
  for (unsigned long m : ms) {
    if (f == OutputFormat::Json && ms.size() > 1)
      out += json_one(m).dump() + "\n";
    else
      out += render_one(m, f);
  }
  return out;
}

int run_table(const CommonOpts& o) {
  const SpecDocument doc = load_spec(o);
  std::cout << render_per_m(
      o, doc,
      [&](unsigned long m, OutputFormat f) {
        return render_table(doc.spec, boseck_table(doc.spec, m), f);
      },
      [&](unsigned long m) {
        return table_to_json(doc.spec, boseck_table(doc.spec, m));
      });
  return 0;
}

int run_decompose(const CommonOpts& o) {
  const SpecDocument doc = load_spec(o);
  std::cout << render_per_m(
      o, doc,
      [&](unsigned long m, OutputFormat f) {
        const BoseckTable t = boseck_table(doc.spec, m);
        return render_decomposition(t, decompose(t), f);
      },
      [&](unsigned long m) {
        const BoseckTable t = boseck_table(doc.spec, m);
        return decomposition_to_json(t, decompose(t));
      });
  return 0;
}

int run_basis(const CommonOpts& o) {
  const SpecDocument doc = load_spec(o);
  std::cout << render_per_m(
      o, doc,
      [&](unsigned long m, OutputFormat f) {
        return render_basis(doc.spec, boseck_table(doc.spec, m),
                            enumerate_basis(doc.spec, m), f);
      },
      [&](unsigned long m) {
        return basis_to_json(doc.spec, boseck_table(doc.spec, m),
                             enumerate_basis(doc.spec, m));
      });
  return 0;
}

int run_deform(const CommonOpts& o) {
  const SpecDocument doc = load_spec(o);
  std::cout << render_deform(deform_report(doc.spec), parse_format(o.format));
  return 0;
}

int run_oracle(unsigned long p, unsigned n, const std::string& format) {
  std::cout << render_oracle(p, n, oracle_sweep(p, n), parse_format(format));
  return 0;
}

int run_verify_spec(const CommonOpts& o) {
  const SpecDocument doc = load_spec(o);
  std::string out;
  unsigned long checks = 0;
  unsigned long failures = 0;
  for (unsigned long m : resolve_m(o, doc)) {
    out += "order m = " + std::to_string(m) + "\n";
    for (const CheckResult& r : identity_suite(doc.spec, m)) {
      ++checks;
      if (r.pass) {
        out += "[ok] " + r.name;
        if (!r.detail.empty()) out += " (" + r.detail + ")";
      } else {
        ++failures;
        out += "[FAIL] " + r.name + ": " + r.detail;
      }
      out += "\n";
    }
  }
  out += "verify: " + std::to_string(checks) + " checks, " +
         std::to_string(failures) + " failures\n";
  std::cout << out;
  return failures == 0 ? 0 : 1;
}

int run_verify_sweep_cli(unsigned long seed, unsigned long count,
                         const std::string& m_text) {
  SweepOptions opt;
  opt.seed = seed;
  opt.count = count;
  if (!m_text.empty()) {
    const std::vector<unsigned long> ms = parse_m_range(m_text);
    opt.m_lo = ms.front();
    opt.m_hi = ms.back();
  }
  const SweepOutcome outcome = run_verify_sweep(opt);
  std::cout << outcome.report;
  return outcome.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Galois-module structure of holomorphic m-polydifferentials"};
  app.set_version_flag("--version", POLYDIFF_VERSION);
  app.require_subcommand(1);

  CommonOpts opts;
  const auto add_common = [&opts](CLI::App* cmd, bool with_m = true) {
    cmd->add_option("--spec", opts.spec_path, "path to a spec JSON file")
        ->required();
    if (with_m)
      cmd->add_option("--m", opts.m_text,
                      "order m, or an inclusive range lo..hi "
                      "(default: the file's m, else 1)");
    cmd->add_option("--format", opts.format, "json|tsv|pretty")
        ->capture_default_str();
    cmd->add_flag("--strict", opts.strict,
                  "also enforce the strict jump-chain condition");
  };

  CLI::App* table = app.add_subcommand(
      "table", "per-place invariants nu_ik(m) and column sums Gamma_k(m)");
  add_common(table);
  CLI::App* decomp = app.add_subcommand(
      "decompose", "indecomposable / character multiplicities");
  add_common(decomp);
  CLI::App* basis = app.add_subcommand(
      "basis", "symbolic basis elements with exact divisors");
  add_common(basis);
  CLI::App* deform = app.add_subcommand(
      "deform", "equivariant deformation dimension blocks");
  add_common(deform, /*with_m=*/false);

  unsigned long oracle_p = 0;
  unsigned oracle_n = 0;
  std::string oracle_format = "json";
  CLI::App* oracle = app.add_subcommand(
      "oracle", "finite-field rank oracle vs closed-form dimensions");
  oracle->add_option("--p", oracle_p, "prime")->required();
  oracle->add_option("--n", oracle_n, "exponent (field is GF(p^n))")
      ->required();
  oracle->add_option("--format", oracle_format, "json|tsv|pretty")
      ->capture_default_str();

  unsigned long seed = 0;
  unsigned long count = 100;
  CLI::App* verify = app.add_subcommand(
      "verify", "re-derive exact identities on one spec or a seeded sweep");
  verify->add_option("--spec", opts.spec_path,
                     "run the identity suite on this spec file");
  verify->add_option("--m", opts.m_text,
                     "orders to check, as m or lo..hi (sweep default 1..4)");
  verify->add_flag("--strict", opts.strict,
                   "also enforce the strict jump-chain condition");
  CLI::Option* seed_opt = verify->add_option(
      "--seed", seed, "sweep deterministically over generated specs");
  verify->add_option("--count", count, "specs per sweep")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (table->parsed()) return run_table(opts);
    if (decomp->parsed()) return run_decompose(opts);
    if (basis->parsed()) return run_basis(opts);
    if (deform->parsed()) return run_deform(opts);
    if (oracle->parsed()) return run_oracle(oracle_p, oracle_n, oracle_format);
    if (verify->parsed()) {
      const bool have_spec = !opts.spec_path.empty();
      const bool have_seed = seed_opt->count() > 0;
      if (have_spec == have_seed)
        throw ValidationError(
            "verify needs exactly one of --spec (one input) or --seed "
            "(generated sweep)");
      return have_spec ? run_verify_spec(opts)
                       : run_verify_sweep_cli(seed, count, opts.m_text);
    }
    throw InternalError("no subcommand dispatched");
  } catch (const ValidationError& e) {
    std::cerr << "polydiff: invalid spec: " << e.what() << "\n";
    return 2;
  } catch (const RealizabilityError& e) {
    std::cerr << "polydiff: not realizable: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "polydiff: unsupported: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "polydiff: internal error (please report): " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "polydiff: error: " << e.what() << "\n";
    return 1;
  }
}
