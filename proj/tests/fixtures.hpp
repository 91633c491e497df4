#pragma once

// Shared desk fixtures.  Every derived number asserted against these in the
// tests was computed by hand from the definitions and cross-checked with the
// exact sum identities; see the individual test comments.

#include "polydiff/core.hpp"

namespace fixtures {

using polydiff::CyclicPlace;
using polydiff::CyclicTowerSpec;
using polydiff::ElabPlace;
using polydiff::ElabSpec;
using polydiff::ExtensionSpec;
using polydiff::GroupParams;
using polydiff::Int;
using polydiff::TameKummerSpec;
using polydiff::TamePlace;

/// Elementary abelian, p = 3, n = 1, two places with phi = 2.
/// delta = 6 each, deg Diff = 12, g_F = 4.
inline ExtensionSpec elab_A() {
  ElabSpec s;
  s.group = GroupParams{Int(3), 1};
  s.places = {ElabPlace{Int(2)}, ElabPlace{Int(2)}};
  return s;
}

/// The same cover described as a cyclic tower of height 1 (the n = 1
/// coincidence partner of elab_A).
inline ExtensionSpec cyclic_A() {
  CyclicTowerSpec s;
  s.group = GroupParams{Int(3), 1};
  s.places = {CyclicPlace{1, {Int(2)}}, CyclicPlace{1, {Int(2)}}};
  s.g_base = 0;
  return s;
}

/// Cyclic, p = 2, n = 2: one totally ramified place with jumps (1, 3) and
/// one place ramified only at the top level with jump 1.
/// delta = (8, 2), deg Diff = 8 + 2*2 = 12, g_F = 3.
inline ExtensionSpec cyclic_B() {
  CyclicTowerSpec s;
  s.group = GroupParams{Int(2), 2};
  s.places = {CyclicPlace{2, {Int(1), Int(3)}}, CyclicPlace{1, {Int(0), Int(1)}}};
  s.g_base = 0;
  return s;
}

/// Cyclic, p = 2, n = 3, one totally ramified place with jumps (1, 3, 11)
/// (the jump vector of upper data (1, 2, 4)).  delta = 28, g_F = 7.
inline ExtensionSpec cyclic_C() {
  CyclicTowerSpec s;
  s.group = GroupParams{Int(2), 3};
  s.places = {CyclicPlace{3, {Int(1), Int(3), Int(11)}}};
  s.g_base = 0;
  return s;
}

/// Structurally fine but non-realizable variant of cyclic_C: jumps
/// (1, 3, 7) pass the shape checks yet make d_4 negative at m = 2.
inline ExtensionSpec cyclic_C_bad() {
  CyclicTowerSpec s;
  s.group = GroupParams{Int(2), 3};
  s.places = {CyclicPlace{3, {Int(1), Int(3), Int(7)}}};
  s.g_base = 0;
  return s;
}

/// Cyclic, p = 2, n = 3, mixing totally ramified places with places whose
/// inertia is the subgroup of order 4.  delta = (82, 18, 28, 82, 48),
/// deg Diff = 82 + 2*18 + 2*28 + 82 + 2*48 = 352, g_F = 169.  Exercises the
/// divisor bookkeeping at partially ramified places, where the coefficient
/// lives modulo the local ramification index 4 rather than modulo 8.
inline ExtensionSpec cyclic_F() {
  CyclicTowerSpec s;
  s.group = GroupParams{Int(2), 3};
  s.places = {CyclicPlace{3, {Int(3), Int(9), Int(45)}},
              CyclicPlace{2, {Int(0), Int(3), Int(9)}},
              CyclicPlace{2, {Int(0), Int(5), Int(15)}},
              CyclicPlace{3, {Int(3), Int(9), Int(45)}},
              CyclicPlace{2, {Int(0), Int(9), Int(27)}}};
  s.g_base = 0;
  return s;
}

/// Tame hyperelliptic desk case: N = 2 in characteristic 3, six branch
/// points.  deg Diff = 6, g_F = 2, d = (0, 2).
inline ExtensionSpec tame_D() {
  TameKummerSpec s;
  s.n_deg = 2;
  s.char_p = 3;
  for (int i = 0; i < 6; ++i)
    s.places.push_back(TamePlace::from_valuation(Int(1), s.n_deg));
  s.g_base = 0;
  return s;
}

/// Tame N = 6 in characteristic 5, vu = (1, 2, 3, 5, 1): mixed ramification
/// indices (6, 3, 2, 6, 6).  deg Diff = 22, g_F = 6, d = (0, 1, 1, 1, 1, 2).
inline ExtensionSpec tame_E() {
  TameKummerSpec s;
  s.n_deg = 6;
  s.char_p = 5;
  for (int v : {1, 2, 3, 5, 1})
    s.places.push_back(TamePlace::from_valuation(Int(v), s.n_deg));
  s.g_base = 0;
  return s;
}

} // namespace fixtures
