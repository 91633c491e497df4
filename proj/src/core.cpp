#include "polydiff/core.hpp"

#include "polydiff/boseck.hpp"

#include <sstream>

namespace polydiff {

bool is_prime(const Int& v) {
  if (v < 2) return false;
  if (v < 4) return true; // 2, 3
  if (v % 2 == 0 || v % 3 == 0) return false;
  // 6k +- 1 wheel up to sqrt(v).  Deterministic on purpose: desk-scale
  // inputs, and the answer must not depend on a randomized witness search.
  Int f = 5;
  while (f * f <= v) {
    if (v % f == 0 || v % (f + 2) == 0) return false;
    f += 6;
  }
  return true;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw InternalError("floor_div: divisor must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw InternalError("ceil_div: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<Int> p_adic_digits(const Int& k, const Int& p, unsigned n) {
  if (p < 2) throw std::out_of_range("p_adic_digits: p must be >= 2");
  if (k < 0 || k >= pow_int(p, n))
    throw std::out_of_range("p_adic_digits: k out of [0, p^n)");
  std::vector<Int> digits(n);
  Int rest = k;
  for (unsigned j = 0; j < n; ++j) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                p.get_mpz_t());
    digits[j] = r;
    rest = q;
  }
  return digits;
}

unsigned long checked_ulong(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    std::ostringstream os;
    os << what << " = " << v.get_str() << " does not fit a machine word";
    throw UnsupportedError(os.str());
  }
  return v.get_ui();
}

TamePlace TamePlace::from_valuation(const Int& vu, const Int& n_deg) {
  TamePlace place;
  if (n_deg < 1) {
    place.vu = vu;
    place.e = 1;
    place.phi = 0;
    return place; // validation will reject the spec anyway
  }
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), vu.get_mpz_t(), n_deg.get_mpz_t());
  Int g = gcd(n_deg, r); // gcd(N, 0) == N, so r == 0 gives e == 1
  place.vu = r;
  place.e = n_deg / g;
  place.phi = r / g;
  return place;
}

Kind kind_of(const ExtensionSpec& spec) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>) return Kind::Cyclic;
        else if constexpr (std::is_same_v<T, ElabSpec>) return Kind::Elab;
        else return Kind::Tame;
      },
      spec);
}

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Cyclic: return "cyclic";
    case Kind::Elab: return "elementary_abelian";
    case Kind::Tame: return "tame";
  }
  return "unknown";
}

Int group_order(const ExtensionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TameKummerSpec>) return s.n_deg;
        else return s.group.order();
      },
      spec);
}

Int genus_base(const ExtensionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ElabSpec>) return Int(0);
        else return s.g_base;
      },
      spec);
}

std::size_t place_count(const ExtensionSpec& spec) {
  return std::visit([](const auto& s) { return s.places.size(); }, spec);
}

std::size_t table_width(const ExtensionSpec& spec) {
  // 2^26 columns of exact rationals is already past any desk computation.
  static constexpr unsigned long kMaxWidth = 1ul << 26;
  const Int order = group_order(spec);
  const unsigned long w = checked_ulong(order, "group order");
  if (w == 0 || w > kMaxWidth)
    throw UnsupportedError("group order too large to tabulate");
  return static_cast<std::size_t>(w);
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) os << "; ";
    os << v;
    first = false;
  }
  for (const auto& v : realizability) {
    if (!first) os << "; ";
    os << v;
    first = false;
  }
  if (first) os << "ok";
  return os.str();
}

namespace {

void validate_group(const GroupParams& g, std::vector<std::string>& out,
                    bool& structural_ok) {
  if (g.p < 2 || !is_prime(g.p)) {
    out.push_back("p = " + g.p.get_str() + " is not prime");
    if (g.p < 2) structural_ok = false;
  }
  if (g.n < 1) {
    out.push_back("height n must be >= 1");
    structural_ok = false;
  }
}

void validate_cyclic(const CyclicTowerSpec& s, ValidationReport& rep,
                     bool strict, bool& structural_ok) {
  validate_group(s.group, rep.violations, structural_ok);
  if (s.g_base < 0) rep.violations.push_back("g_base must be >= 0");
  if (s.places.empty()) {
    rep.violations.push_back("at least one ramified place is required");
    return;
  }
  for (std::size_t i = 0; i < s.places.size(); ++i) {
    const auto& pl = s.places[i];
    const std::string at = "place " + std::to_string(i) + ": ";
    if (pl.e < 1 || pl.e > s.group.n) {
      rep.violations.push_back(at + "e must lie in [1, n]");
      structural_ok = false;
      continue;
    }
    if (pl.phi.size() != s.group.n) {
      rep.violations.push_back(at + "jump vector must have length n");
      structural_ok = false;
      continue;
    }
    const unsigned first_ram = s.group.n - pl.e; // 0-based start of jumps
    for (unsigned j = 0; j < first_ram; ++j)
      if (pl.phi[j] != 0) {
        rep.violations.push_back(at + "phi(" + std::to_string(j + 1) +
                                 ") must be 0 below the ramified range");
        structural_ok = false; // the different exponent is undefined here
      }
    for (unsigned j = first_ram; j < s.group.n; ++j) {
      if (pl.phi[j] < 1)
        rep.violations.push_back(at + "phi(" + std::to_string(j + 1) +
                                 ") must be >= 1 in the ramified range");
      else if (s.group.p >= 2 && gcd(pl.phi[j], s.group.p) != 1)
        rep.violations.push_back(at + "phi(" + std::to_string(j + 1) +
                                 ") must be prime to p");
      if (j > first_ram && pl.phi[j] <= pl.phi[j - 1])
        rep.violations.push_back(at + "jumps must increase strictly");
      if (strict && j > first_ram && pl.phi[j] < s.group.p * pl.phi[j - 1])
        rep.violations.push_back(at + "strict: phi(" + std::to_string(j + 1) +
                                 ") < p * phi(" + std::to_string(j) + ")");
    }
  }
}

void validate_elab(const ElabSpec& s, ValidationReport& rep,
                   bool& structural_ok) {
  validate_group(s.group, rep.violations, structural_ok);
  if (s.places.empty())
    rep.violations.push_back("at least one ramified place is required");
  for (std::size_t i = 0; i < s.places.size(); ++i) {
    const std::string at = "place " + std::to_string(i) + ": ";
    if (s.places[i].phi < 1)
      rep.violations.push_back(at + "phi must be >= 1");
    else if (s.group.p >= 2 && gcd(s.places[i].phi, s.group.p) != 1)
      rep.violations.push_back(at + "phi must be prime to p");
  }
}

void validate_tame(const TameKummerSpec& s, ValidationReport& rep,
                   bool& structural_ok) {
  if (s.char_p < 2 || !is_prime(s.char_p)) {
    rep.violations.push_back("characteristic " + s.char_p.get_str() +
                             " is not prime");
    if (s.char_p < 2) structural_ok = false;
  }
  if (s.n_deg < 2) {
    rep.violations.push_back("tame degree N must be >= 2");
    structural_ok = false;
    return;
  }
  if (gcd(s.n_deg, s.char_p) != 1)
    rep.violations.push_back("tame degree N must be prime to p");
  if (s.g_base < 0) rep.violations.push_back("g_base must be >= 0");
  if (s.places.empty()) {
    rep.violations.push_back("at least one ramified place is required");
    return;
  }
  Int vu_sum = 0;
  Int vu_gcd = s.n_deg;
  for (std::size_t i = 0; i < s.places.size(); ++i) {
    const auto& pl = s.places[i];
    const std::string at = "place " + std::to_string(i) + ": ";
    if (pl.vu < 1 || pl.vu >= s.n_deg) {
      rep.violations.push_back(at + "vu must lie in [1, N-1]");
      continue;
    }
    const TamePlace expect = TamePlace::from_valuation(pl.vu, s.n_deg);
    if (pl.e != expect.e || pl.phi != expect.phi)
      rep.violations.push_back(at + "derived e/phi inconsistent with vu");
    vu_sum += pl.vu;
    vu_gcd = gcd(vu_gcd, pl.vu);
  }
  if (vu_sum % s.n_deg != 0)
    rep.realizability.push_back(
        "sum of vu is " + vu_sum.get_str() + ", not divisible by N = " +
        s.n_deg.get_str() + " (the Gamma_k(1) come out fractional)");
  if (s.g_base == 0 && vu_gcd > 1)
    rep.realizability.push_back(
        "gcd(N, vu_1..vu_s) = " + vu_gcd.get_str() +
        " > 1: the degree-N cover of the rational field is reducible");
}

} // namespace

ValidationReport validate_spec(const ExtensionSpec& spec, bool strict) {
  ValidationReport rep;
  bool structural_ok = true;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>)
          validate_cyclic(s, rep, strict, structural_ok);
        else if constexpr (std::is_same_v<T, ElabSpec>)
          validate_elab(s, rep, structural_ok);
        else
          validate_tame(s, rep, structural_ok);
      },
      spec);

  if (structural_ok && place_count(spec) > 0) {
    const Int tg = two_g_top_minus_two(spec);
    if (tg % 2 != 0) {
      rep.realizability.push_back("2g-2 = " + tg.get_str() +
                                  " is odd: the derived genus is fractional");
    } else {
      rep.g_top = (tg + 2) / 2;
      if (*rep.g_top < 2)
        rep.violations.push_back("derived genus g_F = " + rep.g_top->get_str() +
                                 " is below 2");
    }
  }
  return rep;
}

void require_valid(const ExtensionSpec& spec, bool strict) {
  const ValidationReport rep = validate_spec(spec, strict);
  if (!rep.violations.empty()) throw ValidationError(rep.to_string());
  if (!rep.realizability.empty()) throw RealizabilityError(rep.to_string());
}

} // namespace polydiff
