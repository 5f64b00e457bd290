#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "cofin/error.hpp"

namespace cofin {

using Int = std::int64_t;

// A finite set of positive integers kept strictly increasing.  It stands for
// the cofinite set of positive integers it leaves out.
class GapSet {
 public:
  using const_iterator = std::vector<Int>::const_iterator;

  GapSet() = default;

  GapSet(std::initializer_list<Int> values) : GapSet(std::vector<Int>(values)) {}

  // Throws std::invalid_argument unless `values` is strictly increasing and
  // positive.
  explicit GapSet(std::vector<Int> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] < 1) {
        throw std::invalid_argument("gap set entries must be positive, got " +
                                    std::to_string(values_[k]));
      }
      if (k > 0 && values_[k - 1] >= values_[k]) {
        throw std::invalid_argument("gap set entries must be strictly increasing, got " +
                                    std::to_string(values_[k - 1]) + " before " +
                                    std::to_string(values_[k]));
      }
    }
  }

  // {1, ..., k}; empty for k <= 0.
  static GapSet initial_segment(Int k) {
    GapSet out;
    for (Int v = 1; v <= k; ++v) out.values_.push_back(v);
    return out;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }
  Int operator[](std::size_t k) const { return values_[k]; }
  std::span<Int const> values() const noexcept { return values_; }

  // Largest entry, or 0 for the empty set.
  Int max() const noexcept { return values_.empty() ? 0 : values_.back(); }

  bool contains(Int n) const { return std::binary_search(values_.begin(), values_.end(), n); }

  // |{g in this : g <= n}|
  Int count_le(Int n) const {
    return static_cast<Int>(std::upper_bound(values_.begin(), values_.end(), n) - values_.begin());
  }

  bool is_initial_segment() const noexcept {
    return values_.empty() || values_.back() == static_cast<Int>(values_.size());
  }

  bool includes(GapSet const& other) const {
    return std::includes(values_.begin(), values_.end(), other.values_.begin(), other.values_.end());
  }

  // Position of `n` among the positive integers outside this set (1-based).
  // Only meaningful when `n` is not a gap.
  Int rank_outside(Int n) const { return n - count_le(n); }

  // The r-th smallest positive integer outside this set (r >= 1).
  Int nth_outside(Int r) const {
    Int v = r;
    for (Int g : values_) {
      if (g > v) break;
      ++v;
    }
    return v;
  }

  friend GapSet set_union(GapSet const& a, GapSet const& b) {
    GapSet out;
    out.values_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.values_));
    return out;
  }

  friend GapSet set_difference(GapSet const& a, GapSet const& b) {
    GapSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.values_));
    return out;
  }

  friend bool operator==(GapSet const&, GapSet const&) = default;
  friend std::strong_ordering operator<=>(GapSet const& a, GapSet const& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<Int> values_;
};

}  // namespace cofin
