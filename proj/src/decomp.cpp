#include "polydiff/decomp.hpp"

#include <algorithm>
#include <sstream>

namespace polydiff {

namespace {

void require_kind(const BoseckTable& t, Kind kind, const char* fn) {
  if (t.kind != kind)
    throw UnsupportedError(std::string(fn) + ": table has the wrong kind");
}

[[noreturn]] void negative_multiplicity(std::size_t module_index,
                                        const Int& value) {
  std::ostringstream os;
  os << "multiplicity d_" << module_index << " = " << value.get_str()
     << " is negative: the jump data is not realizable";
  throw RealizabilityError(os.str());
}

/// Wild kinds use 1-based module indices 1..q with dimensions 1..q; tame
/// uses characters 0..N-1, all one-dimensional.
void check_nonnegative_wild(const std::vector<Int>& d) {
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] < 0) negative_multiplicity(j + 1, d[j]);
}

Int wild_total(const std::vector<Int>& d) {
  Int total = 0;
  for (std::size_t j = 0; j < d.size(); ++j)
    total += d[j] * Int(static_cast<unsigned long>(j + 1));
  return total;
}

void check_total(const Int& total, const Int& expected, const char* fn) {
  if (total != expected)
    throw InternalError(std::string(fn) + ": dimension identity failed, " +
                        total.get_str() + " != " + expected.get_str());
}

bool has_totally_ramified_place(const BoseckTable& t) {
  return std::any_of(t.ram_index.begin(), t.ram_index.end(),
                     [&](const Int& r) { return r == t.width; });
}

} // namespace

Decomposition decompose_cyclic(const BoseckTable& t) {
  require_kind(t, Kind::Cyclic, "decompose_cyclic");
  if (t.m < 2)
    throw UnsupportedError(
        "decompose_cyclic handles m >= 2; use decompose_cyclic_m1");
  const std::size_t q = t.gamma.size();
  Decomposition out;
  out.kind = t.kind;
  out.m = t.m;
  out.d.resize(q);
  const Int two_m_minus_1 = 2 * Int(t.m) - 1;
  for (std::size_t k = 1; k < q; ++k) out.d[k - 1] = t.gamma[k - 1] - t.gamma[k];
  out.d[q - 1] = t.gamma[q - 1] + (t.g_base - 1) * two_m_minus_1;
  check_nonnegative_wild(out.d);
  out.total_dim = wild_total(out.d);
  check_total(out.total_dim, two_m_minus_1 * (t.g_top - 1),
              "decompose_cyclic");
  return out;
}

Decomposition decompose_cyclic_m1(const BoseckTable& t) {
  require_kind(t, Kind::Cyclic, "decompose_cyclic_m1");
  if (t.m != 1)
    throw UnsupportedError("decompose_cyclic_m1 handles m = 1 only");
  if (!has_totally_ramified_place(t))
    throw UnsupportedError(
        "m = 1 cyclic decomposition requires a totally ramified place");
  const std::size_t q = t.gamma.size();
  Decomposition out;
  out.kind = t.kind;
  out.m = 1;
  out.d.resize(q);
  for (std::size_t k = 1; k < q; ++k) {
    out.d[k - 1] = t.gamma[k - 1] - t.gamma[k];
    if (k == q - 1) out.d[k - 1] -= 1;
  }
  out.d[q - 1] = t.g_base;
  check_nonnegative_wild(out.d);
  out.total_dim = wild_total(out.d);
  check_total(out.total_dim, t.g_top, "decompose_cyclic_m1");
  return out;
}

Decomposition decompose_elab(const BoseckTable& t) {
  require_kind(t, Kind::Elab, "decompose_elab");
  if (t.m < 2)
    throw UnsupportedError(
        "decompose_elab handles m >= 2; use decompose_elab_m1");
  const std::size_t q = t.gamma.size();
  Decomposition out;
  out.kind = t.kind;
  out.m = t.m;
  out.d.resize(q);
  const Int two_m_minus_1 = 2 * Int(t.m) - 1;
  for (std::size_t k = 1; k < q; ++k) out.d[k - 1] = t.gamma[k - 1] - t.gamma[k];
  out.d[q - 1] = t.gamma[q - 1] - two_m_minus_1;
  check_nonnegative_wild(out.d);
  out.total_dim = wild_total(out.d);
  check_total(out.total_dim, two_m_minus_1 * (t.g_top - 1), "decompose_elab");
  return out;
}

Decomposition decompose_elab_m1(const BoseckTable& t) {
  require_kind(t, Kind::Elab, "decompose_elab_m1");
  if (t.m != 1)
    throw UnsupportedError("decompose_elab_m1 handles m = 1 only");
  const std::size_t q = t.gamma.size();
  // Holomorphic basis counts per character; the last one is always empty.
  std::vector<Int> c(q);
  for (std::size_t k = 0; k + 1 < q; ++k)
    c[k] = std::max(Int(t.gamma[k] - 1), Int(0));
  c[q - 1] = 0;
  Decomposition out;
  out.kind = t.kind;
  out.m = 1;
  out.d.resize(q);
  for (std::size_t k = 1; k < q; ++k) out.d[k - 1] = c[k - 1] - c[k];
  out.d[q - 1] = c[q - 1]; // = 0; the base is rational, so no free part
  check_nonnegative_wild(out.d);
  out.total_dim = wild_total(out.d);
  check_total(out.total_dim, t.g_top, "decompose_elab_m1");
  return out;
}

Decomposition decompose_tame(const BoseckTable& t) {
  require_kind(t, Kind::Tame, "decompose_tame");
  if (t.m != 1)
    throw UnsupportedError("tame covers support m = 1 only");
  const std::size_t n = t.gamma.size();
  Decomposition out;
  out.kind = t.kind;
  out.m = 1;
  out.d.resize(n);
  out.d[0] = t.g_base;
  for (std::size_t k = 1; k < n; ++k) {
    out.d[k] = t.gamma[k] - 1 + t.g_base;
    if (out.d[k] < 0) negative_multiplicity(k, out.d[k]);
  }
  if (out.d[0] < 0) negative_multiplicity(0, out.d[0]);
  out.total_dim = 0;
  for (const Int& dk : out.d) out.total_dim += dk;
  check_total(out.total_dim, t.g_top, "decompose_tame");
  return out;
}

Decomposition decompose(const BoseckTable& t) {
  switch (t.kind) {
    case Kind::Cyclic:
      return t.m == 1 ? decompose_cyclic_m1(t) : decompose_cyclic(t);
    case Kind::Elab:
      return t.m == 1 ? decompose_elab_m1(t) : decompose_elab(t);
    case Kind::Tame:
      return decompose_tame(t);
  }
  throw InternalError("decompose: unknown kind");
}

} // namespace polydiff
