#pragma once

// Algebraic laws checked on random elements.  Deterministic for a given seed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cofin/bicyclic.hpp"
#include "cofin/cof_map.hpp"
#include "cofin/expr.hpp"
#include "cofin/extensions.hpp"
#include "cofin/green.hpp"
#include "cofin/random.hpp"

namespace cofin {

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

namespace detail {

using Law = std::function<bool(Rng&)>;

inline std::vector<std::pair<std::string, Law>> laws() {
  std::vector<std::pair<std::string, Law>> out;
  auto add = [&](std::string name, Law law) { out.emplace_back(std::move(name), std::move(law)); };

  add("associativity", [](Rng& rng) {
    auto a = random_map(rng), b = random_map(rng), c = random_map(rng);
    return (a * b) * c == a * (b * c);
  });
  add("inverse axioms", [](Rng& rng) {
    auto a = random_map(rng), b = random_map(rng);
    auto ai = invert(a);
    return a * ai * a == a && ai * a * ai == ai && invert(a * b) == invert(b) * ai;
  });
  add("idempotents commute", [](Rng& rng) {
    auto e = random_idempotent(rng), f = random_idempotent(rng);
    auto ef = e * f;
    return ef == f * e && is_idempotent(ef) && ef.dom_gaps() == set_union(e.dom_gaps(), f.dom_gaps());
  });
  add("shift index is a homomorphism", [](Rng& rng) {
    auto a = random_map(rng), b = random_map(rng);
    return shift_index(a * b) == shift_index(a) + shift_index(b);
  });
  add("tail law", [](Rng& rng) {
    auto g = random_map(rng);
    Int const t = tail_threshold(g), f = shift_index(g);
    for (Int i = t; i < t + 40; ++i) {
      if (evaluate(g, i) != i + f) return false;
    }
    if (t > 1) {
      auto v = evaluate(g, t - 1);
      if (v && t - 1 > g.dom_gaps().max() && *v > g.ran_gaps().max()) return false;
    }
    return true;
  });
  add("canonical order preserves index", [](Rng& rng) {
    auto b = random_map(rng);
    auto a = b * random_idempotent(rng);
    return canonical_leq(a, b) && shift_index(a) == shift_index(b);
  });
  add("simplicity witness", [](Rng& rng) {
    auto a = random_map(rng), b = random_map(rng);
    auto w = simplicity_witness(a, b);
    return w.left * a * w.right == b;
  });
  add("green relations via idempotents", [](Rng& rng) {
    auto a = random_map(rng);
    auto b = rng() % 2 ? make(a.dom_gaps(), random_gap_set(rng)) : random_map(rng);
    bool const r = (a * invert(a)) == (b * invert(b));
    bool const l = (invert(a) * a) == (invert(b) * b);
    return green_r(a, b) == r && green_l(a, b) == l && green_h(a, b) == (r && l);
  });
  add("connect idempotents", [](Rng& rng) {
    auto e = random_idempotent(rng), i = random_idempotent(rng);
    auto x = connect_idempotents(e, i);
    return x * invert(x) == e && invert(x) * x == i;
  });
  add("semilattice image", [](Rng& rng) {
    auto e = random_idempotent(rng), f = random_idempotent(rng);
    return semilattice_image(e * f) == set_union(semilattice_image(e), semilattice_image(f)) &&
           natural_leq(e, f) == semilattice_image(e).includes(semilattice_image(f));
  });
  add("solutions satisfy their equation", [](Rng& rng) {
    auto a = random_map(rng, 8, 4);
    auto b = rng() % 2 ? a * random_map(rng, 8, 4) : random_map(rng, 8, 4);
    for (auto const& x : solve_right(a, b).solutions) {
      if (a * x != b) return false;
    }
    for (auto const& x : solve_left(a, b).solutions) {
      if (x * a != b) return false;
    }
    return true;
  });
  add("bicyclic embedding", [](Rng& rng) {
    auto x = random_bicyclic(rng), y = random_bicyclic(rng);
    return embed(x * y) == embed(x) * embed(y) && as_bicyclic(embed(x)) == x &&
           shift_index(embed(x)) == static_cast<Int>(x.n) - static_cast<Int>(x.m);
  });
  add("fresh bicyclic copy", [](Rng& rng) {
    auto fb = fresh_bicyclic(random_idempotent(rng));
    auto x = random_bicyclic(rng, 6), y = random_bicyclic(rng, 6);
    return fb.element(x) * fb.element(y) == fb.element(x * y) && !in_shift_copy(fb.element(x));
  });
  add("tail projection and witnesses", [](Rng& rng) {
    auto l = random_map(rng);
    auto p = project_to_bicyclic(l);
    auto e = random_idempotent(rng);
    auto ab = absorb_idempotent(e);
    auto below = bicyclic_idempotent_below(e);
    auto cw = conjugation_witness(l);
    return in_shift_copy(p.shifted) && is_shift_copy_idempotent(p.tail) && l * p.tail == p.shifted * p.tail &&
           p.tail * l == p.tail * p.shifted && e * ab.tail == ab.product && is_shift_copy_idempotent(ab.product) &&
           is_shift_copy_idempotent(below) && natural_leq(below, e) && is_shift_copy_idempotent(cw.conjugate) &&
           is_shift_copy_idempotent(cw.back_conjugate);
  });
  add("group congruence", [](Rng& rng) {
    auto a = random_map(rng);
    auto b = rng() % 2 ? a * random_idempotent(rng) : random_map(rng);
    auto w = group_congruence(a, b);
    if (w.related != (shift_index(a) == shift_index(b))) return false;
    if (!w.related) return true;
    return is_shift_copy_idempotent(*w.left) && *w.left * a == *w.left * b && a * *w.right == b * *w.right;
  });
  add("adjunction semigroup associativity", [](Rng& rng) {
    auto pick = [&]() -> AdjElement {
      if (rng() % 2) return GroupInt{static_cast<Int>(rng() % 21) - 10};
      return random_map(rng);
    };
    auto x = pick(), y = pick(), z = pick();
    return adj_mul(adj_mul(x, y), z) == adj_mul(x, adj_mul(y, z));
  });
  add("zero-adjoined associativity", [](Rng& rng) {
    auto pick = [&]() -> ZeroElement {
      if (rng() % 4 == 0) return AdjoinedZero{};
      return random_map(rng);
    };
    auto x = pick(), y = pick(), z = pick();
    return zero_mul(zero_mul(x, y), z) == zero_mul(x, zero_mul(y, z));
  });
  add("zero neighbourhood stability", [](Rng& rng) {
    Int const i = 1 + static_cast<Int>(rng() % 5);
    auto a = random_map(rng);
    Int const j = zero_nbhd_stability(i, a);
    auto g = random_deep_map(rng, i), h = random_deep_map(rng, i), k = random_deep_map(rng, j);
    return in_zero_nbhd(i, g * h) && in_zero_nbhd(i, k * a) && in_zero_nbhd(i, a * k) &&
           in_zero_nbhd(i, g) == in_zero_nbhd(i, invert(g));
  });
  add("render round trip", [](Rng& rng) {
    Value v;
    switch (rng() % 4) {
      case 0: v = random_map(rng); break;
      case 1: v = random_bicyclic(rng); break;
      case 2: v = GroupInt{static_cast<Int>(rng() % 2001) - 1000}; break;
      default: v = AdjoinedZero{}; break;
    }
    return eval_text(render(v)) == v;
  });
  return out;
}

}  // namespace detail

inline std::vector<PropertyResult> run_selftest(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> results;
  for (auto const& [name, law] : detail::laws()) {
    Rng rng(seed);
    PropertyResult r{name};
    for (std::size_t k = 0; k < cases; ++k) {
      bool ok = false;
      try {
        ok = law(rng);
      } catch (std::exception const&) {
        ok = false;
      }
      ok ? ++r.passed : ++r.failed;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cofin
