#pragma once

// Two semigroups built around the maps: the monoid with an adjoined zero, and
// the adjunction semigroup glueing the maps to the additive integers along
// shift_index.  Both come with the membership predicates of their basic
// neighbourhoods.

#include <algorithm>
#include <compare>
#include <variant>

#include "cofin/cof_map.hpp"

namespace cofin {

struct AdjoinedZero {
  friend bool operator==(AdjoinedZero, AdjoinedZero) = default;
  friend auto operator<=>(AdjoinedZero, AdjoinedZero) = default;
};

// An element of the additive group of integers, kept apart from plain Int so
// the two carriers cannot be confused.
struct GroupInt {
  Int value = 0;
  friend bool operator==(GroupInt, GroupInt) = default;
  friend auto operator<=>(GroupInt, GroupInt) = default;
};

using ZeroElement = std::variant<AdjoinedZero, CofMap>;
using AdjElement = std::variant<GroupInt, CofMap>;

inline ZeroElement zero_mul(ZeroElement const& x, ZeroElement const& y) {
  auto const* a = std::get_if<CofMap>(&x);
  auto const* b = std::get_if<CofMap>(&y);
  if (!a || !b) return AdjoinedZero{};
  return compose(*a, *b);
}

// Basic neighbourhood of the zero: maps missing at least i points on each
// side, plus the zero itself.
inline bool in_zero_nbhd(Int i, ZeroElement const& x) {
  require_positive(i, "neighbourhood depth");
  auto const* g = std::get_if<CofMap>(&x);
  if (!g) return true;
  auto const depth = static_cast<std::size_t>(i);
  return g->dom_gaps().size() >= depth && g->ran_gaps().size() >= depth;
}

// Mixed products are pushed into the integers through shift_index, which
// is applied to the map operand.
inline AdjElement adj_mul(AdjElement const& x, AdjElement const& y) {
  auto const* a = std::get_if<CofMap>(&x);
  auto const* b = std::get_if<CofMap>(&y);
  if (a && b) return compose(*a, *b);
  Int const left = a ? shift_index(*a) : std::get<GroupInt>(x).value;
  Int const right = b ? shift_index(*b) : std::get<GroupInt>(y).value;
  return GroupInt{left + right};
}

// Membership in U_anchor(x) = {x} together with the maps of index x that do
// not extend anchor.
inline bool in_adj_nbhd(Int x, CofMap const& anchor, AdjElement const& elem) {
  if (shift_index(anchor) != x) {
    throw DomainError("anchor must have shift index " + std::to_string(x) + ", got " +
                      std::to_string(shift_index(anchor)));
  }
  if (auto const* n = std::get_if<GroupInt>(&elem)) return n->value == x;
  auto const& b = std::get<CofMap>(elem);
  return shift_index(b) == x && !canonical_leq(anchor, b);
}

// Depth j such that both translates g * a and a * g of any g in the depth-j
// neighbourhood of zero land in the depth-i one.  A product loses at most
// |D_a| range gaps on one side and |R_a| domain gaps on the other.
inline Int zero_nbhd_stability(Int i, CofMap const& a) {
  require_positive(i, "neighbourhood depth");
  return i + static_cast<Int>(std::max(a.dom_gaps().size(), a.ran_gaps().size()));
}

}  // namespace cofin
