#include "polydiff/deform.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>

#include "polydiff/modrep.hpp"

namespace polydiff {

Int h1_quotient_dim(const Int& g_quotient, const Int& delta, const Int& q) {
  return 3 * g_quotient - 3 + ceil_div(delta, q);
}

Int deform_cyclic(const Int& delta, const Int& q) {
  return floor_div(2 * delta, q) - ceil_div(delta, q);
}

namespace {

void require_one_place(std::size_t n_places) {
  if (n_places != 1)
    throw ValidationError(
        "deformation reports cover the one-branch-point case only: need "
        "exactly 1 ramified place, got " +
        std::to_string(n_places));
}

} // namespace

DeformReport deform_cyclic_report(const CyclicTowerSpec& spec) {
  require_one_place(spec.places.size());
  if (spec.g_base != 0)
    throw ValidationError(
        "deformation reports require a rational base (genus 0), got genus " +
        spec.g_base.get_str());
  if (spec.places[0].e != spec.group.n)
    throw ValidationError(
        "deformation reports require the single place to be totally "
        "ramified: e = " +
        std::to_string(spec.places[0].e) +
        " but the tower has n = " + std::to_string(spec.group.n));

  const ExtensionSpec wrapped(spec);
  const BoseckTable table = boseck_table(wrapped, 2);
  const Decomposition dec = decompose(table);

  DeformReport r;
  r.kind = Kind::Cyclic;
  r.q = table.width;
  r.delta = table.delta.at(0);
  // Every indecomposable module of a cyclic p-group has a one-dimensional
  // covariant space, so the direct sum collapses to sum_k d_k.
  r.covariant_total = 0;
  for (const Int& dk : dec.d) r.covariant_total += dk;
  r.h1_quotient = h1_quotient_dim(0, r.delta, r.q);
  r.h1_local = r.covariant_total - r.h1_quotient;

  // Exact identities of the one-branch-point case; a failure is a bug, not
  // bad input (the input was validated by the table build).
  if (table.gamma.at(0) != floor_div(2 * r.delta, r.q))
    throw InternalError("deform: Gamma_0(2) != floor(2 delta / q)");
  if (r.covariant_total != table.gamma.at(0) - 3)
    throw InternalError("deform: sum d_k != Gamma_0(2) - 3");
  if (r.h1_local != deform_cyclic(r.delta, r.q))
    throw InternalError("deform: splitting disagrees with the floor/ceil form");
  return r;
}

DeformReport deform_elab(const ElabSpec& spec) {
  require_one_place(spec.places.size());

  const ExtensionSpec wrapped(spec);
  const BoseckTable table = boseck_table(wrapped, 2);
  const Decomposition dec = decompose(table);

  DeformReport r;
  r.kind = Kind::Elab;
  r.q = table.width;
  r.delta = table.delta.at(0);

  r.covariant_total = 0;
  for (std::size_t j = 1; j <= dec.d.size(); ++j)
    r.covariant_total +=
        dec.d[j - 1] *
        Int(covariant_dim_closed(Int((unsigned long)j), table.p, spec.group.n));
  r.h1_quotient = h1_quotient_dim(0, r.delta, r.q);
  r.h1_local = r.covariant_total - r.h1_quotient;

  // Gamma-based closed form, summed over the positive multiples of p
  // strictly below q.  Its boundary term is dropped and its per-module
  // dimensions follow the two-band description, so it is reported with a
  // comparison flag instead of being asserted.
  const std::size_t ip = checked_ulong(table.p - 1, "p - 1");
  Int closed = table.gamma.at(0) + table.gamma.at(ip) - 6;
  for (Int nu = table.p; nu < r.q; nu += table.p) {
    const std::size_t i = checked_ulong(nu, "nu");
    closed -= table.gamma.at(i - 1) - table.gamma.at(i);
  }
  r.closed_form = closed;
  r.closed_form_agrees = (closed == r.covariant_total);
  return r;
}

DeformReport deform_report(const ExtensionSpec& spec) {
  return std::visit(
      [](const auto& s) -> DeformReport {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicTowerSpec>)
          return deform_cyclic_report(s);
        else if constexpr (std::is_same_v<T, ElabSpec>)
          return deform_elab(s);
        else
          throw UnsupportedError(
              "deformation reports are implemented for the wild kinds only "
              "(cyclic tower or elementary abelian)");
      },
      spec);
}

} // namespace polydiff
