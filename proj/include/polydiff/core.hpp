#pragma once

// Core types for ramification data of G-covers of curves in characteristic p:
// cyclic towers of degree p^n, elementary abelian covers of degree p^n, and
// tame cyclic (Kummer) covers of degree prime to p.  A "spec" is the desk
// description of such a cover: the group, the base genus, and one entry per
// ramified place carrying its jump data.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polydiff {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Error taxonomy.  The CLI maps these onto its exit codes: validation -> 2,
// realizability -> 3, unsupported -> 4.  InternalError means a proven
// identity failed at runtime and is always a bug, never an input problem.
// ---------------------------------------------------------------------------

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RealizabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Exact integer helpers.  All division here is mathematical floor/ceil on
// exact integers; nothing in the library truncates toward zero.
// ---------------------------------------------------------------------------

/// Deterministic primality by trial division (6k+-1 wheel).  Desk-scale
/// inputs only; no probabilistic fallback.
bool is_prime(const Int& v);

Int pow_int(const Int& base, unsigned long exp);

/// floor(a/b), b > 0.
Int floor_div(const Int& a, const Int& b);

/// ceil(a/b), b > 0.
Int ceil_div(const Int& a, const Int& b);

/// Base-p digits a_1..a_n of k, least significant first:
/// k = a_1 + a_2 p + ... + a_n p^(n-1).  Requires 0 <= k < p^n.
std::vector<Int> p_adic_digits(const Int& k, const Int& p, unsigned n);

/// v as unsigned long, or UnsupportedError naming `what` if it does not fit.
unsigned long checked_ulong(const Int& v, const char* what);

// ---------------------------------------------------------------------------
// Extension specs.
// ---------------------------------------------------------------------------

struct GroupParams {
  Int p;          // residue characteristic, prime
  unsigned n = 1; // tower height (cyclic) or rank (elementary abelian)

  Int order() const { return pow_int(p, n); }

  bool operator==(const GroupParams&) const = default;
};

/// Ramified place in a cyclic p^n-tower.  e is the level count with
/// nontrivial inertia (ramification index p^e); phi has length n, is zero on
/// the first n-e entries, and carries the jump vector on the rest.
struct CyclicPlace {
  unsigned e = 1;
  std::vector<Int> phi;

  bool operator==(const CyclicPlace&) const = default;
};

/// Ramified place of an elementary abelian p^n-cover of the rational field:
/// fully ramified with a single jump phi.
struct ElabPlace {
  Int phi;

  bool operator==(const ElabPlace&) const = default;
};

/// Ramified place of a tame cyclic cover y^N = u: vu is the multiplicity of
/// the place in div(u) (taken in [1, N-1] mod N); e and phi are derived.
struct TamePlace {
  Int vu;
  Int e;   // N / gcd(N, vu)
  Int phi; // e * vu / N, an integer

  static TamePlace from_valuation(const Int& vu, const Int& n_deg);

  bool operator==(const TamePlace&) const = default;
};

struct CyclicTowerSpec {
  GroupParams group;
  std::vector<CyclicPlace> places;
  Int g_base = 0;

  bool operator==(const CyclicTowerSpec&) const = default;
};

struct ElabSpec {
  GroupParams group; // base is rational; g_base is identically 0
  std::vector<ElabPlace> places;

  bool operator==(const ElabSpec&) const = default;
};

struct TameKummerSpec {
  Int n_deg;  // group order, >= 2 and prime to char_p
  Int char_p; // field characteristic
  std::vector<TamePlace> places;
  Int g_base = 0;

  bool operator==(const TameKummerSpec&) const = default;
};

using ExtensionSpec = std::variant<CyclicTowerSpec, ElabSpec, TameKummerSpec>;

enum class Kind { Cyclic, Elab, Tame };

Kind kind_of(const ExtensionSpec& spec);
const char* kind_name(Kind kind);

/// |G|: p^n for the wild kinds, N for tame covers.
Int group_order(const ExtensionSpec& spec);

Int genus_base(const ExtensionSpec& spec);

std::size_t place_count(const ExtensionSpec& spec);

/// Group order as a table size.  Tabulation is capped (desk scale); beyond
/// the cap this throws UnsupportedError rather than attempting the alloc.
std::size_t table_width(const ExtensionSpec& spec);

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

struct ValidationReport {
  /// Structural/arithmetic violations: malformed jump vectors, composite p,
  /// genus below 2, ...  Nonempty => ValidationError from require_valid.
  std::vector<std::string> violations;
  /// Well-formed data that cannot come from an actual cover (fractional
  /// ramification sums, odd canonical degree).  => RealizabilityError.
  std::vector<std::string> realizability;
  /// Derived top genus, when the structure is sound enough to compute it.
  std::optional<Int> g_top;

  bool ok() const { return violations.empty() && realizability.empty(); }
  std::string to_string() const;
};

/// Checks every invariant and reports all findings at once (never throws).
/// strict additionally enforces the heuristic jump-growth check
/// phi(i,j+1) >= p * phi(i,j) on consecutive ramified levels.
ValidationReport validate_spec(const ExtensionSpec& spec, bool strict = false);

/// Throws ValidationError / RealizabilityError with the joined report text
/// if the spec does not pass validate_spec.
void require_valid(const ExtensionSpec& spec, bool strict = false);

} // namespace polydiff
