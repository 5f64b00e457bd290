#pragma once

// The bicyclic monoid <p, q | pq = 1>, its copy inside the maps generated by
// the unit shifts, and the constructions relating arbitrary maps to that
// copy: fresh disjoint bicyclic submonoids, tail projections, and witnesses
// for the least group congruence.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cofin/cof_map.hpp"

namespace cofin {

// Normal form q^m p^n.
struct Bicyclic {
  std::uint64_t m = 0;
  std::uint64_t n = 0;

  friend bool operator==(Bicyclic const&, Bicyclic const&) = default;
  friend auto operator<=>(Bicyclic const&, Bicyclic const&) = default;
};

// q^m p^n q^s p^t: cancel k = min(n, s) occurrences of pq.
inline Bicyclic operator*(Bicyclic const& x, Bicyclic const& y) {
  auto const k = std::min(x.n, y.m);
  return {x.m + y.m - k, x.n + y.n - k};
}

inline Bicyclic inverse(Bicyclic const& x) { return {x.n, x.m}; }

inline bool is_idempotent(Bicyclic const& x) { return x.m == x.n; }

// q^m p^n -> the map with domain gaps {1..m} and range gaps {1..n}; p goes to
// the shift n -> n + 1 and q to its inverse.
inline CofMap embed(Bicyclic const& x) {
  return make(GapSet::initial_segment(static_cast<Int>(x.m)), GapSet::initial_segment(static_cast<Int>(x.n)));
}

// Inverse of embed on its image.
inline std::optional<Bicyclic> as_bicyclic(CofMap const& g) {
  if (!g.dom_gaps().is_initial_segment() || !g.ran_gaps().is_initial_segment()) return std::nullopt;
  return Bicyclic{g.dom_gaps().size(), g.ran_gaps().size()};
}

inline bool in_shift_copy(CofMap const& g) { return as_bicyclic(g).has_value(); }

inline bool is_shift_copy_idempotent(CofMap const& g) { return in_shift_copy(g) && is_idempotent(g); }

// A bicyclic submonoid below a given idempotent that avoids the shift copy.
struct FreshBicyclic {
  CofMap unit;     // identity of the submonoid
  CofMap forward;  // image of p
  CofMap back;     // image of q

  // Image of q^m p^n.
  CofMap element(Bicyclic const& x) const {
    CofMap out = unit;
    for (std::uint64_t k = 0; k < x.m; ++k) out = compose(out, back);
    for (std::uint64_t k = 0; k < x.n; ++k) out = compose(out, forward);
    return out;
  }
};

// With n0 = gap_bound(e) + 1 the unit is the identity on {n0 - 1} together
// with {n0 + 1, n0 + 2, ...}; `forward` fixes n0 - 1 and shifts the rest by
// one.  Gap n0 without gap n0 - 1 keeps every element out of the shift copy.
inline FreshBicyclic fresh_bicyclic(CofMap const& e) {
  require_idempotent(e, "argument");
  Int const n0 = gap_bound(e) + 1;
  GapSet const hole{n0 - 1};
  GapSet const unit_gaps = set_difference(GapSet::initial_segment(n0), hole);
  CofMap const forward = make(unit_gaps, set_difference(GapSet::initial_segment(n0 + 1), hole));
  FreshBicyclic out{make(unit_gaps, unit_gaps), forward, invert(forward)};
  if (compose(out.forward, out.back) != out.unit || !natural_leq(out.unit, e) || in_shift_copy(out.unit)) {
    throw std::logic_error("fresh_bicyclic postcondition failed");
  }
  return out;
}

struct TailProjection {
  CofMap shifted;  // in the shift copy
  CofMap tail;     // idempotent of the shift copy
};

// mu in the shift copy and an idempotent eps of the shift copy with
// l * eps = mu * eps and eps * l = eps * mu.
//
// Both are cut at tail_threshold(l) rather than at gap_bound(l): below the
// threshold l need not act as a shift, even past every gap.
inline TailProjection project_to_bicyclic(CofMap const& l) {
  Int const t = tail_threshold(l);
  Int const f = shift_index(l);
  TailProjection out{make(GapSet::initial_segment(t - 1), GapSet::initial_segment(t - 1 + f)),
                     tail_identity(t + std::max<Int>(0, f))};
  if (compose(l, out.tail) != compose(out.shifted, out.tail) ||
      compose(out.tail, l) != compose(out.tail, out.shifted)) {
    throw std::logic_error("project_to_bicyclic postcondition failed");
  }
  return out;
}

struct Absorption {
  CofMap tail;     // idempotent of the shift copy
  CofMap product;  // p * tail, again in the shift copy
};

inline Absorption absorb_idempotent(CofMap const& p) {
  require_idempotent(p, "argument");
  CofMap tail = tail_identity(dom_bound(p));
  CofMap product = compose(p, tail);
  if (!is_shift_copy_idempotent(product)) throw std::logic_error("absorb_idempotent postcondition failed");
  return {std::move(tail), std::move(product)};
}

// The identity on {n, n + 1, ...} where n - 1 is the last gap of e.
inline CofMap bicyclic_idempotent_below(CofMap const& e) {
  require_idempotent(e, "argument");
  return tail_identity(dom_bound(e));
}

struct ConjugationWitness {
  CofMap tail;            // eps
  CofMap conjugate;       // l * eps * l^-1
  CofMap back_conjugate;  // l^-1 * eps * l
};

inline ConjugationWitness conjugation_witness(CofMap const& l) {
  CofMap tail = project_to_bicyclic(l).tail;
  CofMap const li = invert(l);
  CofMap conj = compose(compose(l, tail), li);
  CofMap back = compose(compose(li, tail), l);
  if (!is_shift_copy_idempotent(conj) || !is_shift_copy_idempotent(back)) {
    throw std::logic_error("conjugation_witness postcondition failed");
  }
  return {std::move(tail), std::move(conj), std::move(back)};
}

// Least group congruence: a ~ b iff a and b agree on some tail [i, inf),
// iff they have the same shift index.
struct CongruenceWitness {
  bool related = false;
  std::optional<CofMap> left;   // eps * a = eps * b
  std::optional<CofMap> right;  // a * eps = b * eps
};

inline CongruenceWitness group_congruence(CofMap const& a, CofMap const& b) {
  Int const f = shift_index(a);
  if (f != shift_index(b)) return {};
  // Both maps are the shift by f from `start` on; cutting the range at
  // start + f also discards the images of the points below start.
  Int const start = std::max(tail_threshold(a), tail_threshold(b));
  CofMap tail = tail_identity(start + std::max<Int>(0, f));
  if (compose(tail, a) != compose(tail, b) || compose(a, tail) != compose(b, tail)) {
    throw std::logic_error("group_congruence witness failed");
  }
  return {true, tail, tail};
}

}  // namespace cofin
