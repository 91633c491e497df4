#pragma once

// Tangent-space dimension counts for equivariant deformations of a curve
// with a wild cyclic or elementary abelian automorphism group, in the
// one-branch-point setting: rational base, a single totally ramified place.
// Every quantity is recomputed from the ramification datum through the
// order-2 invariant table; none are accepted as free inputs.

#include <optional>

#include "polydiff/boseck.hpp"
#include "polydiff/decomp.hpp"

namespace polydiff {

struct DeformReport {
  Kind kind = Kind::Cyclic;
  Int q;                // group order
  Int delta;            // different exponent at the unique ramified place
  Int covariant_total;  // sum_j d_j(m=2) * dim of the j-th covariant space
  Int h1_quotient;      // quotient-curve block: -3 + ceil(delta / q)
  Int h1_local;         // local block: covariant_total - h1_quotient
  /// Closed-form expression for covariant_total in terms of the Gamma_k(2)
  /// row sums (elementary abelian only).  Reported for comparison, never
  /// asserted: it can differ from the direct sum whenever
  /// Gamma_{q-1}(2) != 3, because its derivation drops the projective
  /// multiplicity, and for n >= 3 it also inherits the two-band
  /// covariant-dimension undercount (see modrep.hpp).
  std::optional<Int> closed_form;
  /// closed_form == covariant_total; true when closed_form is absent.
  bool closed_form_agrees = true;
};

/// 3 * g_quotient - 3 + ceil(delta / q): the quotient-side block of the
/// tangent space for a cover of a genus-g_quotient curve whose different
/// at the unique ramified fiber has degree delta.
Int h1_quotient_dim(const Int& g_quotient, const Int& delta, const Int& q);

/// floor(2 delta / q) - ceil(delta / q): the local deformation block for a
/// cyclic group of order q, totally ramified over one point of the
/// projective line with different exponent delta.
Int deform_cyclic(const Int& delta, const Int& q);

/// Full report for a cyclic tower: requires base genus 0, exactly one
/// place, e = n.  Asserts the exact identities Gamma_0(2) == floor(2d/q),
/// sum d_k == Gamma_0(2) - 3, and h1_local == deform_cyclic(delta, q).
DeformReport deform_cyclic_report(const CyclicTowerSpec& spec);

/// Full report for an elementary abelian cover with one ramified place.
/// covariant_total is the authoritative direct sum
/// sum_j d_j * covariant_dim_closed(j); closed_form carries the Gamma-based
/// expression Gamma_0 + Gamma_{p-1} - 6 - sum_{nu in {p, 2p, ...}, nu < q}
/// (Gamma_{nu-1} - Gamma_nu) together with the agreement flag.
DeformReport deform_elab(const ElabSpec& spec);

/// Dispatch by kind; tame extensions are unsupported.
DeformReport deform_report(const ExtensionSpec& spec);

} // namespace polydiff
