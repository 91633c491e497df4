#include "polydiff/json_io.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace polydiff {

namespace {

std::string dec(const Int& v) { return v.get_str(); }

/// mpq_class prints "a/b", or just "a" when the denominator is 1.
std::string rat_str(const Rat& v) { return v.get_str(); }

Int to_int(const Json& v, const std::string& what) {
  std::string text;
  if (v.is_number_integer() || v.is_number_unsigned()) {
    text = v.dump();
  } else if (v.is_string()) {
    text = v.get<std::string>();
  } else {
    throw ValidationError("field '" + what +
                          "': expected an integer or a decimal string");
  }
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw ValidationError("field '" + what + "': not a decimal integer: '" +
                          text + "'");
  }
}

unsigned to_unsigned(const Json& v, const std::string& what) {
  const Int i = to_int(v, what);
  if (i < 0) throw ValidationError("field '" + what + "': must be >= 0");
  return static_cast<unsigned>(checked_ulong(i, what.c_str()));
}

const Json& require_key(const Json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end())
    throw ValidationError("spec document is missing the '" + key + "' key");
  return *it;
}

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw ValidationError("unknown key '" + item.key() + "' in " + where);
}

std::vector<CyclicPlace> parse_cyclic_places(const Json& arr, unsigned n) {
  std::vector<CyclicPlace> out;
  std::size_t index = 0;
  for (const Json& pl : arr) {
    const std::string where = "places[" + std::to_string(index) + "]";
    if (!pl.is_object())
      throw ValidationError(where + ": each place must be a JSON object");
    reject_unknown_keys(pl, {"phi", "e"}, where);
    const Json& phi = require_key(pl, "phi");
    if (!phi.is_array())
      throw ValidationError(where +
                            ".phi: a cyclic tower place carries the full "
                            "jump vector as an array");
    CyclicPlace place;
    place.e = pl.contains("e") ? to_unsigned(pl.at("e"), where + ".e") : n;
    std::size_t j = 0;
    for (const Json& entry : phi)
      place.phi.push_back(
          to_int(entry, where + ".phi[" + std::to_string(j++) + "]"));
    out.push_back(std::move(place));
    ++index;
  }
  return out;
}

std::vector<ElabPlace> parse_elab_places(const Json& arr) {
  std::vector<ElabPlace> out;
  std::size_t index = 0;
  for (const Json& pl : arr) {
    const std::string where = "places[" + std::to_string(index) + "]";
    if (!pl.is_object())
      throw ValidationError(where + ": each place must be a JSON object");
    reject_unknown_keys(pl, {"phi"}, where);
    const Json& phi = require_key(pl, "phi");
    if (phi.is_array())
      throw ValidationError(where +
                            ".phi: an elementary abelian place carries a "
                            "single jump, not an array");
    out.push_back(ElabPlace{to_int(phi, where + ".phi")});
    ++index;
  }
  return out;
}

std::vector<TamePlace> parse_tame_places(const Json& arr, const Int& n_deg) {
  std::vector<TamePlace> out;
  std::size_t index = 0;
  for (const Json& pl : arr) {
    const std::string where = "places[" + std::to_string(index) + "]";
    if (!pl.is_object())
      throw ValidationError(where + ": each place must be a JSON object");
    reject_unknown_keys(pl, {"vu"}, where);
    out.push_back(
        TamePlace::from_valuation(to_int(require_key(pl, "vu"), where + ".vu"),
                                  n_deg));
    ++index;
  }
  return out;
}

} // namespace

SpecDocument parse_spec_document(const std::string& text) {
  return parse_spec_document(Json::parse(text));
}

SpecDocument parse_spec_document(const Json& doc) {
  if (!doc.is_object())
    throw ValidationError("spec document must be a JSON object");
  std::string kind = require_key(doc, "kind").is_string()
                         ? doc.at("kind").get<std::string>()
                         : throw ValidationError("'kind' must be a string");
  if (kind == "elab") kind = "elementary_abelian";
  if (kind == "kummer") kind = "tame";
  if (kind != "cyclic" && kind != "elementary_abelian" && kind != "tame")
    throw ValidationError(
        "'kind' must be one of cyclic, elementary_abelian (alias elab), "
        "tame (alias kummer); got '" +
        kind + "'");

  SpecDocument out;
  if (doc.contains("m")) {
    const Int m = to_int(doc.at("m"), "m");
    if (m < 1) throw ValidationError("field 'm': must be >= 1");
    out.m = checked_ulong(m, "m");
  }

  const Json& places = require_key(doc, "places");
  if (!places.is_array())
    throw ValidationError("'places' must be an array of place objects");

  if (kind == "cyclic") {
    reject_unknown_keys(doc, {"kind", "p", "n", "g_base", "m", "places"},
                        "a cyclic spec document");
    CyclicTowerSpec s;
    s.group.p = to_int(require_key(doc, "p"), "p");
    s.group.n = to_unsigned(require_key(doc, "n"), "n");
    s.g_base = doc.contains("g_base") ? to_int(doc.at("g_base"), "g_base")
                                      : Int(0);
    s.places = parse_cyclic_places(places, s.group.n);
    out.spec = std::move(s);
  } else if (kind == "elementary_abelian") {
    reject_unknown_keys(doc, {"kind", "p", "n", "g_base", "m", "places"},
                        "an elementary abelian spec document");
    if (doc.contains("g_base") && to_int(doc.at("g_base"), "g_base") != 0)
      throw ValidationError(
          "elementary abelian covers are modeled over the rational base; "
          "'g_base' must be 0 or omitted");
    ElabSpec s;
    s.group.p = to_int(require_key(doc, "p"), "p");
    s.group.n = to_unsigned(require_key(doc, "n"), "n");
    s.places = parse_elab_places(places);
    out.spec = std::move(s);
  } else {
    reject_unknown_keys(doc, {"kind", "p", "n_deg", "N", "g_base", "m",
                              "places"},
                        "a tame spec document");
    if (doc.contains("n_deg") == doc.contains("N"))
      throw ValidationError(
          "a tame spec names its group order by exactly one of 'n_deg' or "
          "'N'");
    TameKummerSpec s;
    s.n_deg = to_int(doc.contains("n_deg") ? doc.at("n_deg") : doc.at("N"),
                     "n_deg");
    s.char_p = to_int(require_key(doc, "p"), "p");
    s.g_base = doc.contains("g_base") ? to_int(doc.at("g_base"), "g_base")
                                      : Int(0);
    if (s.n_deg < 1)
      throw ValidationError("field 'n_deg': must be a positive group order");
    s.places = parse_tame_places(places, s.n_deg);
    out.spec = std::move(s);
  }
  return out;
}

Json spec_to_json(const ExtensionSpec& spec) {
  Json doc = Json::object();
  doc["kind"] = kind_name(kind_of(spec));
  std::visit(
      [&doc](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>) {
          doc["p"] = dec(s.group.p);
          doc["n"] = std::to_string(s.group.n);
          doc["g_base"] = dec(s.g_base);
          Json arr = Json::array();
          for (const CyclicPlace& pl : s.places) {
            Json jp = Json::object();
            jp["e"] = std::to_string(pl.e);
            Json phi = Json::array();
            for (const Int& v : pl.phi) phi.push_back(dec(v));
            jp["phi"] = std::move(phi);
            arr.push_back(std::move(jp));
          }
          doc["places"] = std::move(arr);
        } else if constexpr (std::is_same_v<T, ElabSpec>) {
          doc["p"] = dec(s.group.p);
          doc["n"] = std::to_string(s.group.n);
          Json arr = Json::array();
          for (const ElabPlace& pl : s.places)
            arr.push_back(Json{{"phi", dec(pl.phi)}});
          doc["places"] = std::move(arr);
        } else {
          doc["p"] = dec(s.char_p);
          doc["n_deg"] = dec(s.n_deg);
          doc["g_base"] = dec(s.g_base);
          Json arr = Json::array();
          for (const TamePlace& pl : s.places)
            arr.push_back(Json{{"vu", dec(pl.vu)}});
          doc["places"] = std::move(arr);
        }
      },
      spec);
  return doc;
}

// --------------------------------------------------------------------------
// JSON report documents.
// --------------------------------------------------------------------------

namespace {

Json int_array(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(dec(x));
  return arr;
}

Json report_head(const char* schema) {
  Json doc = Json::object();
  doc["schema"] = schema;
  doc["tool_version"] = POLYDIFF_VERSION;
  return doc;
}

} // namespace

Json table_to_json(const ExtensionSpec& spec, const BoseckTable& t) {
  Json doc = report_head("polydiff/table/v1");
  doc["kind"] = kind_name(t.kind);
  doc["m"] = std::to_string(t.m);
  doc["p"] = dec(t.p);
  doc["group_order"] = dec(t.width);
  doc["g_base"] = dec(t.g_base);
  doc["g_top"] = dec(t.g_top);
  doc["deg_different"] = dec(t.deg_diff);
  doc["delta"] = int_array(t.delta);
  doc["ram_index"] = int_array(t.ram_index);
  Json nu = Json::array();
  for (const auto& row : t.nu) {
    Json jr = Json::array();
    for (const Rat& v : row) jr.push_back(rat_str(v));
    nu.push_back(std::move(jr));
  }
  doc["nu"] = std::move(nu);
  doc["gamma"] = int_array(t.gamma);
  doc["spec"] = spec_to_json(spec);
  return doc;
}

Json decomposition_to_json(const BoseckTable& t, const Decomposition& d) {
  Json doc = report_head("polydiff/decomposition/v1");
  doc["kind"] = kind_name(d.kind);
  doc["m"] = std::to_string(d.m);
  doc["group_order"] = dec(t.width);
  // Wild kinds: d[j-1] is the multiplicity of the j-dimensional
  // indecomposable; tame: d[k] is the multiplicity of the k-th character.
  doc["module_index"] =
      d.kind == Kind::Tame ? "character_exponent" : "module_dimension";
  doc["d"] = int_array(d.d);
  doc["total_dim"] = dec(d.total_dim);
  doc["gamma"] = int_array(t.gamma);
  return doc;
}

Json basis_to_json(const ExtensionSpec& spec, const BoseckTable& t,
                   const std::vector<BasisElement>& elems) {
  Json doc = report_head("polydiff/basis/v1");
  doc["kind"] = kind_name(t.kind);
  doc["m"] = std::to_string(t.m);
  doc["group_order"] = dec(t.width);
  doc["count"] = std::to_string(elems.size());
  Json arr = Json::array();
  for (const BasisElement& e : elems) {
    const PlaceDivisor div = divisor_of_element(e, spec, t);
    const HolomorphyCheck check = verify_holomorphic(e, spec, t);
    Json je = Json::object();
    je["k"] = dec(e.k);
    je["nu_x"] = dec(e.nu_x);
    je["g_exponents"] = int_array(e.g_exponents);
    Json jd = Json::object();
    jd["ramified_coeffs"] = int_array(div.ramified_coeffs);
    jd["places_above"] = int_array(div.places_above);
    jd["places_over_infinity"] = dec(div.places_over_infinity);
    jd["infinity_coeff"] = dec(div.infinity_coeff);
    jd["residual_degree"] = dec(div.residual_degree);
    jd["total_degree"] = dec(div.total_degree);
    je["divisor"] = std::move(jd);
    je["holomorphic"] = check.holomorphic;
    arr.push_back(std::move(je));
  }
  doc["elements"] = std::move(arr);
  return doc;
}

Json deform_to_json(const DeformReport& r) {
  Json doc = report_head("polydiff/deform/v1");
  doc["kind"] = kind_name(r.kind);
  doc["q"] = dec(r.q);
  doc["delta"] = dec(r.delta);
  doc["covariant_total"] = dec(r.covariant_total);
  doc["h1_quotient"] = dec(r.h1_quotient);
  doc["h1_local"] = dec(r.h1_local);
  if (r.closed_form)
    doc["closed_form"] = dec(*r.closed_form);
  else
    doc["closed_form"] = nullptr;
  doc["closed_form_agrees"] = r.closed_form_agrees;
  return doc;
}

Json oracle_to_json(unsigned long p, unsigned n,
                    const std::vector<OracleRow>& rows) {
  Json doc = report_head("polydiff/oracle/v1");
  doc["p"] = std::to_string(p);
  doc["n"] = std::to_string(n);
  bool covariant_all = true;
  bool fixed_all = true;
  Json arr = Json::array();
  for (const OracleRow& r : rows) {
    covariant_all = covariant_all && r.covariant_oracle == r.covariant_closed;
    fixed_all = fixed_all && r.fixed_dim == 1;
    Json jr = Json::object();
    jr["j"] = std::to_string(r.j);
    jr["covariant_oracle"] = std::to_string(r.covariant_oracle);
    jr["covariant_closed"] = std::to_string(r.covariant_closed);
    jr["fixed_dim"] = std::to_string(r.fixed_dim);
    arr.push_back(std::move(jr));
  }
  doc["rows"] = std::move(arr);
  doc["oracle_matches_closed"] = covariant_all;
  doc["fixed_all_one"] = fixed_all;
  return doc;
}

// --------------------------------------------------------------------------
// Text renderings.
// --------------------------------------------------------------------------

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "pretty") return OutputFormat::Pretty;
  throw ValidationError("unknown output format '" + name +
                        "' (expected json, tsv, or pretty)");
}

namespace {

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string joined(const std::vector<Int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += dec(v[i]);
  }
  return out;
}

/// Right-aligns `cell` to `width` with spaces.
std::string pad(const std::string& cell, std::size_t width) {
  return std::string(width > cell.size() ? width - cell.size() : 0, ' ') +
         cell;
}

} // namespace

std::string render_table(const ExtensionSpec& spec, const BoseckTable& t,
                         OutputFormat f) {
  if (f == OutputFormat::Json) return dump_json(table_to_json(spec, t));
  std::ostringstream out;
  const std::size_t width = t.gamma.size();
  const std::size_t n_places = t.nu.size();
  if (f == OutputFormat::Tsv) {
    out << "# polydiff table v1 tool_version=" << POLYDIFF_VERSION << "\n";
    out << "# kind=" << kind_name(t.kind) << " m=" << t.m << " p=" << dec(t.p)
        << " group_order=" << dec(t.width) << " g_base=" << dec(t.g_base)
        << " g_top=" << dec(t.g_top)
        << " deg_different=" << dec(t.deg_diff) << "\n";
    out << "# delta=" << joined(t.delta, ",")
        << " ram_index=" << joined(t.ram_index, ",") << "\n";
    out << "k";
    for (std::size_t i = 0; i < n_places; ++i) out << "\tnu_" << i;
    out << "\tgamma\n";
    for (std::size_t k = 0; k < width; ++k) {
      out << k;
      for (std::size_t i = 0; i < n_places; ++i)
        out << "\t" << rat_str(t.nu[i][k]);
      out << "\t" << dec(t.gamma[k]) << "\n";
    }
    return out.str();
  }
  // Pretty.
  out << "Invariant table (" << kind_name(t.kind) << ", m = " << t.m << ")\n";
  out << "group order " << dec(t.width) << ", characteristic " << dec(t.p)
      << ", g_base " << dec(t.g_base) << ", g_top " << dec(t.g_top)
      << ", deg Different " << dec(t.deg_diff) << "\n";
  for (std::size_t i = 0; i < n_places; ++i)
    out << "place " << i << ": delta = " << dec(t.delta[i])
        << ", ramification index " << dec(t.ram_index[i]) << "\n";
  std::vector<std::size_t> col(n_places, 4);
  for (std::size_t i = 0; i < n_places; ++i)
    for (std::size_t k = 0; k < width; ++k)
      col[i] = std::max(col[i], rat_str(t.nu[i][k]).size());
  std::size_t kw = std::max<std::size_t>(1, std::to_string(width - 1).size());
  std::size_t gw = 7;
  for (std::size_t k = 0; k < width; ++k)
    gw = std::max(gw, dec(t.gamma[k]).size());
  out << pad("k", kw) << " |";
  for (std::size_t i = 0; i < n_places; ++i)
    out << " " << pad("nu_" + std::to_string(i), col[i]);
  out << " | " << pad("Gamma_k", gw) << "\n";
  for (std::size_t k = 0; k < width; ++k) {
    out << pad(std::to_string(k), kw) << " |";
    for (std::size_t i = 0; i < n_places; ++i)
      out << " " << pad(rat_str(t.nu[i][k]), col[i]);
    out << " | " << pad(dec(t.gamma[k]), gw) << "\n";
  }
  return out.str();
}

std::string render_decomposition(const BoseckTable& t, const Decomposition& d,
                                 OutputFormat f) {
  if (f == OutputFormat::Json) return dump_json(decomposition_to_json(t, d));
  std::ostringstream out;
  const bool tame = d.kind == Kind::Tame;
  if (f == OutputFormat::Tsv) {
    out << "# polydiff decomposition v1 tool_version=" << POLYDIFF_VERSION
        << "\n";
    out << "# kind=" << kind_name(d.kind) << " m=" << d.m
        << " group_order=" << dec(t.width)
        << " total_dim=" << dec(d.total_dim) << "\n";
    out << (tame ? "character" : "module_dim") << "\td\n";
    for (std::size_t j = 0; j < d.d.size(); ++j)
      out << (tame ? j : j + 1) << "\t" << dec(d.d[j]) << "\n";
    return out.str();
  }
  out << "Decomposition (" << kind_name(d.kind) << ", m = " << d.m << ")\n";
  out << "total dimension " << dec(d.total_dim) << "\n";
  for (std::size_t j = 0; j < d.d.size(); ++j) {
    if (tame)
      out << "character " << j << ": multiplicity " << dec(d.d[j]) << "\n";
    else
      out << "dim " << j + 1 << " module: multiplicity " << dec(d.d[j])
          << "\n";
  }
  return out.str();
}

std::string render_basis(const ExtensionSpec& spec, const BoseckTable& t,
                         const std::vector<BasisElement>& elems,
                         OutputFormat f) {
  if (f == OutputFormat::Json) return dump_json(basis_to_json(spec, t, elems));
  std::ostringstream out;
  if (f == OutputFormat::Tsv) {
    out << "# polydiff basis v1 tool_version=" << POLYDIFF_VERSION << "\n";
    out << "# kind=" << kind_name(t.kind) << " m=" << t.m
        << " count=" << elems.size() << "\n";
    out << "k\tnu_x\tg_exponents\tramified_coeffs\tinfinity_coeff\t"
           "residual_degree\tholomorphic\n";
    for (const BasisElement& e : elems) {
      const PlaceDivisor div = divisor_of_element(e, spec, t);
      const HolomorphyCheck check = verify_holomorphic(e, spec, t);
      out << dec(e.k) << "\t" << dec(e.nu_x) << "\t"
          << joined(e.g_exponents, ",") << "\t"
          << joined(div.ramified_coeffs, ",") << "\t"
          << dec(div.infinity_coeff) << "\t" << dec(div.residual_degree)
          << "\t" << (check.holomorphic ? 1 : 0) << "\n";
    }
    return out.str();
  }
  out << "Basis (" << kind_name(t.kind) << ", m = " << t.m << "): "
      << elems.size() << " elements\n";
  for (const BasisElement& e : elems) {
    const PlaceDivisor div = divisor_of_element(e, spec, t);
    out << "k = " << dec(e.k) << ", nu_x = " << dec(e.nu_x)
        << ", g exponents (" << joined(e.g_exponents, ", ")
        << "), divisor coeffs (" << joined(div.ramified_coeffs, ", ")
        << "), infinity " << dec(div.infinity_coeff) << ", residual "
        << dec(div.residual_degree) << "\n";
  }
  return out.str();
}

std::string render_deform(const DeformReport& r, OutputFormat f) {
  if (f == OutputFormat::Json) return dump_json(deform_to_json(r));
  std::ostringstream out;
  const std::string closed =
      r.closed_form ? dec(*r.closed_form) : std::string("-");
  if (f == OutputFormat::Tsv) {
    out << "# polydiff deform v1 tool_version=" << POLYDIFF_VERSION << "\n";
    out << "key\tvalue\n";
    out << "kind\t" << kind_name(r.kind) << "\n";
    out << "q\t" << dec(r.q) << "\n";
    out << "delta\t" << dec(r.delta) << "\n";
    out << "covariant_total\t" << dec(r.covariant_total) << "\n";
    out << "h1_quotient\t" << dec(r.h1_quotient) << "\n";
    out << "h1_local\t" << dec(r.h1_local) << "\n";
    out << "closed_form\t" << closed << "\n";
    out << "closed_form_agrees\t" << (r.closed_form_agrees ? 1 : 0) << "\n";
    return out.str();
  }
  out << "Deformation report (" << kind_name(r.kind) << ")\n";
  out << "group order " << dec(r.q) << ", different exponent " << dec(r.delta)
      << "\n";
  out << "covariant total " << dec(r.covariant_total) << " = quotient block "
      << dec(r.h1_quotient) << " + local block " << dec(r.h1_local) << "\n";
  if (r.closed_form)
    out << "Gamma-based closed form " << closed << " ("
        << (r.closed_form_agrees ? "agrees" : "disagrees")
        << " with the direct sum)\n";
  return out.str();
}

std::string render_oracle(unsigned long p, unsigned n,
                          const std::vector<OracleRow>& rows,
                          OutputFormat f) {
  if (f == OutputFormat::Json) return dump_json(oracle_to_json(p, n, rows));
  std::ostringstream out;
  if (f == OutputFormat::Tsv) {
    out << "# polydiff oracle v1 tool_version=" << POLYDIFF_VERSION << "\n";
    out << "# p=" << p << " n=" << n << "\n";
    out << "j\tcovariant_oracle\tcovariant_closed\tfixed_dim\n";
    for (const OracleRow& r : rows)
      out << r.j << "\t" << r.covariant_oracle << "\t" << r.covariant_closed
          << "\t" << r.fixed_dim << "\n";
    return out.str();
  }
  out << "Covariant/fixed dimension sweep over GF(" << p << "^" << n << ")\n";
  bool all = true;
  for (const OracleRow& r : rows) {
    out << "j = " << r.j << ": covariant " << r.covariant_oracle
        << " (closed form " << r.covariant_closed << "), fixed "
        << r.fixed_dim << "\n";
    all = all && r.covariant_oracle == r.covariant_closed && r.fixed_dim == 1;
  }
  out << (all ? "all rows match the closed form; every fixed space is a line"
              : "MISMATCH: some row disagrees with the closed form")
      << "\n";
  return out.str();
}

} // namespace polydiff
