#pragma once

// Monotone injective partial selfmaps of the positive integers whose domain
// and range are both cofinite.
//
// Such a map is pinned down by the two finite sets it misses: the domain
// gaps D and the range gaps R.  The only order-preserving bijection between
// the complements sends the k-th non-gap of D to the k-th non-gap of R, so
// the pair (D, R) is a canonical form and equality is structural.
//
// Composition is left to right: (x)(a * b) = ((x)a)b.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cofin/error.hpp"
#include "cofin/gap_set.hpp"

namespace cofin {

class CofMap {
 public:
  CofMap() = default;  // identity
  CofMap(GapSet dom_gaps, GapSet ran_gaps)
      : dom_gaps_(std::move(dom_gaps)), ran_gaps_(std::move(ran_gaps)) {}

  GapSet const& dom_gaps() const noexcept { return dom_gaps_; }
  GapSet const& ran_gaps() const noexcept { return ran_gaps_; }

  friend bool operator==(CofMap const&, CofMap const&) = default;
  friend auto operator<=>(CofMap const&, CofMap const&) = default;

 private:
  GapSet dom_gaps_;
  GapSet ran_gaps_;
};

inline CofMap make(GapSet dom_gaps, GapSet ran_gaps) {
  return CofMap(std::move(dom_gaps), std::move(ran_gaps));
}

inline CofMap identity() { return {}; }

// n -> n + 1
inline CofMap shift_up() { return make({}, {1}); }

// n -> n - 1 on {2, 3, ...}
inline CofMap shift_down() { return make({1}, {}); }

inline void require_positive(Int n, char const* what) {
  if (n < 1) throw DomainError(std::string(what) + " must be a positive integer, got " + std::to_string(n));
}

// Image of n, or nullopt when n is a domain gap.
inline std::optional<Int> evaluate(CofMap const& g, Int n) {
  require_positive(n, "argument");
  if (g.dom_gaps().contains(n)) return std::nullopt;
  return g.ran_gaps().nth_outside(g.dom_gaps().rank_outside(n));
}

// Preimage of m, or nullopt when m is a range gap.
inline std::optional<Int> preimage(CofMap const& g, Int m) {
  require_positive(m, "argument");
  if (g.ran_gaps().contains(m)) return std::nullopt;
  return g.dom_gaps().nth_outside(g.ran_gaps().rank_outside(m));
}

inline CofMap invert(CofMap const& g) { return make(g.ran_gaps(), g.dom_gaps()); }

// Left-to-right composite x -> ((x)g)h, computed on gap sets.
inline CofMap compose(CofMap const& g, CofMap const& h) {
  // Points of dom g sent into a domain gap of h drop out of the domain.
  std::vector<Int> lost_dom;
  for (Int y : h.dom_gaps()) {
    if (!g.ran_gaps().contains(y)) lost_dom.push_back(*preimage(g, y));
  }
  // Points of dom h that g never reaches drop out of the range.
  std::vector<Int> lost_ran;
  for (Int y : g.ran_gaps()) {
    if (!h.dom_gaps().contains(y)) lost_ran.push_back(*evaluate(h, y));
  }
  return make(set_union(g.dom_gaps(), GapSet(std::move(lost_dom))),
              set_union(h.ran_gaps(), GapSet(std::move(lost_ran))));
}

inline CofMap operator*(CofMap const& g, CofMap const& h) { return compose(g, h); }

inline bool is_idempotent(CofMap const& g) { return g.dom_gaps() == g.ran_gaps(); }

inline void require_idempotent(CofMap const& g, char const* what) {
  if (!is_idempotent(g)) throw DomainError(std::string(what) + " must be an idempotent (equal domain and range gaps)");
}

// The eventual shift: (i)g = i + shift_index(g) for every large i.
// A homomorphism onto the additive integers.
inline Int shift_index(CofMap const& g) {
  return static_cast<Int>(g.ran_gaps().size()) - static_cast<Int>(g.dom_gaps().size());
}

// Least n with [n, inf) inside the domain.
inline Int dom_bound(CofMap const& g) { return g.dom_gaps().max() + 1; }
// Least n with [n, inf) inside the range.
inline Int ran_bound(CofMap const& g) { return g.ran_gaps().max() + 1; }
inline Int gap_bound(CofMap const& g) { return std::max(dom_bound(g), ran_bound(g)); }

// Least t past every domain gap whose image lies past every range gap.  From
// t on, g is the plain shift i -> i + shift_index(g).
inline Int tail_threshold(CofMap const& g) {
  auto const& d = g.dom_gaps();
  auto const& r = g.ran_gaps();
  // Past max D the rank of t is t - |D|; its image clears max R once that
  // rank exceeds the number of non-gaps of R up to max R.
  Int const by_range = r.max() - static_cast<Int>(r.size()) + 1 + static_cast<Int>(d.size());
  return std::max(d.max() + 1, by_range);
}

// Identity on {k, k + 1, ...}.
inline CofMap tail_identity(Int k) {
  require_positive(k, "tail start");
  auto gaps = GapSet::initial_segment(k - 1);
  return make(gaps, gaps);
}

// Natural order on idempotents: e <= f iff dom e is inside dom f.
inline bool natural_leq(CofMap const& e, CofMap const& f) {
  require_idempotent(e, "left operand");
  require_idempotent(f, "right operand");
  return e.dom_gaps().includes(f.dom_gaps());
}

// a <= b iff a = b * e for some idempotent e, i.e. a is a restriction of b.
inline bool canonical_leq(CofMap const& a, CofMap const& b) {
  return a == compose(b, compose(invert(a), a));
}

// Every idempotent above e: one for each subset of the gaps of e, in
// lexicographic order of the gap sets.
inline std::vector<CofMap> up_set(CofMap const& e) {
  require_idempotent(e, "argument");
  auto const gaps = e.dom_gaps().values();
  if (gaps.size() > 24) throw DomainError("up-set too large: idempotent has more than 24 gaps");
  std::vector<CofMap> out;
  std::size_t const count = std::size_t{1} << gaps.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Int> subset;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
      if (mask & (std::size_t{1} << k)) subset.push_back(gaps[k]);
    }
    GapSet s(std::move(subset));
    out.push_back(make(s, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cofin
