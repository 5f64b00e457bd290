#pragma once

// Green's relations and the witnesses behind simplicity, bisimplicity and the
// semilattice of idempotents, plus exact solution sets of a * x = b and
// x * a = b.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cofin/cof_map.hpp"

namespace cofin {

// R: equal domains.
inline bool green_r(CofMap const& a, CofMap const& b) { return a.dom_gaps() == b.dom_gaps(); }
// L: equal ranges.
inline bool green_l(CofMap const& a, CofMap const& b) { return a.ran_gaps() == b.ran_gaps(); }
// H is trivial.
inline bool green_h(CofMap const& a, CofMap const& b) { return a == b; }
// The monoid is bisimple.
inline bool green_d(CofMap const&, CofMap const&) { return true; }

// The unique x with x * x^-1 = e and x^-1 * x = i.
inline CofMap connect_idempotents(CofMap const& e, CofMap const& i) {
  require_idempotent(e, "first argument");
  require_idempotent(i, "second argument");
  return make(e.dom_gaps(), i.dom_gaps());
}

struct SimplicityWitness {
  CofMap left;   // applied before a
  CofMap right;  // applied after a
};

// left * a * right = b for any a, b.
inline SimplicityWitness simplicity_witness(CofMap const& a, CofMap const& b) {
  return {make(b.dom_gaps(), a.dom_gaps()), make(a.ran_gaps(), b.ran_gaps())};
}

// Idempotents correspond to finite subsets of the positive integers; the
// product of idempotents goes to the union.
inline GapSet semilattice_image(CofMap const& e) {
  require_idempotent(e, "argument");
  return e.dom_gaps();
}

enum class Side { left, right };

// All x with factor * x = target (right) or x * factor = target (left).
struct SolutionSet {
  std::vector<CofMap> solutions;  // lexicographic in (dom gaps, ran gaps)
  Side side = Side::right;
  CofMap factor;
  CofMap target;
};

namespace detail {

// Enumerates every x with a * x = b.
//
// x is forced on the points (y)a with y outside D_b: it must send them to
// (y)b.  It must leave (y)a undefined for y in D_b \ D_a.  The only freedom
// is at the range gaps of a: each may stay out of dom x, or be sent strictly
// between the images of the nearest forced points around it.  Those open
// intervals consist of range gaps of b, so the search is finite.
inline std::vector<CofMap> solve_right_impl(CofMap const& a, CofMap const& b) {
  if (!b.dom_gaps().includes(a.dom_gaps())) return {};

  std::vector<Int> excluded;  // (D_b \ D_a)a
  for (Int y : set_difference(b.dom_gaps(), a.dom_gaps())) excluded.push_back(*evaluate(a, y));
  GapSet const excluded_set(std::move(excluded));
  GapSet const& free_points = a.ran_gaps();

  // Forced value at p, or nullopt if p is not a forced point.
  auto forced_value = [&](Int p) -> std::optional<Int> {
    if (free_points.contains(p) || excluded_set.contains(p)) return std::nullopt;
    return evaluate(b, *preimage(a, p));
  };

  struct Slot {
    Int point;
    Int lower;  // value of the nearest forced point below, 0 if none
    Int upper;  // value of the nearest forced point above
  };
  std::vector<Slot> slots;
  for (Int r : free_points) {
    Slot s{r, 0, 0};
    for (Int p = r - 1; p >= 1; --p) {
      if (auto v = forced_value(p)) {
        s.lower = *v;
        break;
      }
    }
    for (Int p = r + 1;; ++p) {
      if (auto v = forced_value(p)) {
        s.upper = *v;
        break;
      }
    }
    slots.push_back(s);
  }

  std::vector<CofMap> out;
  std::vector<Int> unused_points;
  std::vector<Int> used_values;
  std::function<void(std::size_t, Int)> search = [&](std::size_t k, Int floor) {
    if (k == slots.size()) {
      GapSet dom = set_union(excluded_set, GapSet(unused_points));
      std::vector<Int> values = used_values;
      GapSet ran = set_difference(b.ran_gaps(), GapSet(std::move(values)));
      out.push_back(make(std::move(dom), std::move(ran)));
      return;
    }
    Slot const& s = slots[k];
    Int const lo = std::max(floor, s.lower);
    unused_points.push_back(s.point);
    search(k + 1, lo);
    unused_points.pop_back();
    for (Int v = lo + 1; v < s.upper; ++v) {
      used_values.push_back(v);
      search(k + 1, v);
      used_values.pop_back();
    }
  };
  search(0, 0);

  for (auto const& x : out) {
    if (compose(a, x) != b) throw std::logic_error("solve_right produced a non-solution");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline SolutionSet solve_right(CofMap const& a, CofMap const& b) {
  return {detail::solve_right_impl(a, b), Side::right, a, b};
}

// x * a = b  iff  a^-1 * x^-1 = b^-1.
inline SolutionSet solve_left(CofMap const& a, CofMap const& b) {
  auto inverses = detail::solve_right_impl(invert(a), invert(b));
  std::vector<CofMap> out;
  out.reserve(inverses.size());
  for (auto const& x : inverses) out.push_back(invert(x));
  std::sort(out.begin(), out.end());
  return {std::move(out), Side::left, a, b};
}

}  // namespace cofin
