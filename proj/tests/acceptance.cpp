// Acceptance suite.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Element generator: gap sets inside [1, 30] with at most 10 entries.
// Pointwise oracles use explicit tables truncated at 200.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cofin/bicyclic.hpp"
#include "cofin/cli.hpp"
#include "cofin/cof_map.hpp"
#include "cofin/expr.hpp"
#include "cofin/extensions.hpp"
#include "cofin/green.hpp"
#include "cofin/random.hpp"
#include "oracle.hpp"

using namespace cofin;

namespace {

constexpr std::size_t kCases = 10000;
constexpr Int kTruncation = 200;
constexpr std::uint64_t kSeed = 0x5eed2010;

// Collects failures for one criterion; keeps the first message.
struct Check {
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, std::string const& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::string show(CofMap const& g) { return render(g); }

int g_failed = 0;

void criterion(int number, char const* title, std::function<void(Check&)> body) {
  auto const start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (std::exception const& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d. %s (%.2fs)", c.failures ? "FAIL" : "PASS", number, title, secs);
  if (c.failures) {
    std::printf(" -- %zu failures, first: %s", c.failures, c.first.c_str());
    ++g_failed;
  }
  std::printf("\n");
  std::fflush(stdout);
}

// Second operand sharing a feature with the first, so that positive cases
// of the relations under test occur often.
CofMap related_partner(Rng& rng, CofMap const& a) {
  switch (rng() % 4) {
    case 0: return make(a.dom_gaps(), random_gap_set(rng));
    case 1: return make(random_gap_set(rng), a.ran_gaps());
    case 2: return a;
    default: return random_map(rng);
  }
}

GapSet random_subset(Rng& rng, GapSet const& s) {
  std::vector<Int> out;
  for (Int v : s) {
    if (rng() % 2) out.push_back(v);
  }
  return GapSet(std::move(out));
}

bool tables_agree_from(oracle::Table const& a, oracle::Table const& b, Int from) {
  for (Int x = from; x <= a.size(); ++x) {
    if (a.at(x) != b.at(x)) return false;
  }
  return true;
}

}  // namespace

int main() {
  auto const suite_start = std::chrono::steady_clock::now();

  criterion(1, "compose matches truncated pointwise composition on [1,200] and in tail shift", [](Check& c) {
    Rng rng(kSeed + 1);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const g = random_map(rng), h = random_map(rng);
      auto const gh = compose(g, h);
      auto const pointwise = oracle::then(oracle::tabulate(g, kTruncation), oracle::tabulate(h, 2 * kTruncation));
      c.expect(oracle::tabulate(gh, kTruncation).image == pointwise.image,
               "pointwise mismatch for " + show(g) + " * " + show(h));
      c.expect(shift_index(gh) == oracle::top_shift(pointwise), "tail shift mismatch for " + show(g) + " * " + show(h));
    }
  });

  criterion(2, "inverse-monoid axioms, associativity, commuting idempotents", [](Check& c) {
    Rng rng(kSeed + 2);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const a = random_map(rng), b = random_map(rng), d = random_map(rng);
      auto const ai = invert(a);
      c.expect((a * b) * d == a * (b * d), "associativity");
      c.expect(a * ai * a == a, "a a' a = a for " + show(a));
      c.expect(ai * a * ai == ai, "a' a a' = a' for " + show(a));
      c.expect(invert(a * b) == invert(b) * ai, "(ab)' = b'a'");
      auto const e = random_idempotent(rng), f = random_idempotent(rng);
      c.expect(e * f == f * e, "idempotents commute");
      c.expect(is_idempotent(e * f) && (e * f).dom_gaps() == set_union(e.dom_gaps(), f.dom_gaps()),
               "idempotent meet is the gap union");
      c.expect(identity() * a == a && a * identity() == a, "identity law");
    }
  });

  criterion(3, "simplicity witness: left * a * right = b", [](Check& c) {
    Rng rng(kSeed + 3);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const a = random_map(rng), b = random_map(rng);
      auto const w = simplicity_witness(a, b);
      c.expect(w.left * a * w.right == b, "witness fails for " + show(a) + ", " + show(b));
      auto const pointwise = oracle::then(
          oracle::then(oracle::tabulate(w.left, kTruncation), oracle::tabulate(a, 2 * kTruncation)),
          oracle::tabulate(w.right, 4 * kTruncation));
      c.expect(pointwise.image == oracle::tabulate(b, kTruncation).image, "pointwise witness check");
    }
  });

  criterion(4, "Green's relations: gap-set tests agree with idempotent tests; H is equality", [](Check& c) {
    Rng rng(kSeed + 4);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const a = random_map(rng);
      auto const b = related_partner(rng, a);
      bool const r = a * invert(a) == b * invert(b);
      bool const l = invert(a) * a == invert(b) * b;
      c.expect(green_r(a, b) == r, "R mismatch for " + show(a) + ", " + show(b));
      c.expect(green_l(a, b) == l, "L mismatch for " + show(a) + ", " + show(b));
      c.expect(green_h(a, b) == (r && l) && green_h(a, b) == (a == b), "H mismatch");
      c.expect(green_d(a, b), "D is universal");
    }
  });

  criterion(5, "connect_idempotents postconditions; uniqueness by exhaustive search in [1,6]", [](Check& c) {
    Rng rng(kSeed + 5);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const e = random_idempotent(rng), i = random_idempotent(rng);
      auto const x = connect_idempotents(e, i);
      c.expect(x * invert(x) == e && invert(x) * x == i, "postcondition for " + show(e) + ", " + show(i));
    }
    // Any solution has domain gaps D_e and range gaps D_i, so it lies in the
    // [1,6] universe whenever e and i do.
    auto const universe = oracle::all_maps(6);
    for (int k = 0; k < 100; ++k) {
      auto const e = random_idempotent(rng, 6, 6), i = random_idempotent(rng, 6, 6);
      std::size_t found = 0;
      for (auto const& x : universe) {
        if (x * invert(x) == e && invert(x) * x == i) {
          ++found;
          c.expect(x == connect_idempotents(e, i), "exhaustive solution differs");
        }
      }
      c.expect(found == 1, "expected exactly one connecting element, found " + std::to_string(found));
    }
  });

  criterion(6, "natural order is reverse gap inclusion; semilattice image is a homomorphism", [](Check& c) {
    Rng rng(kSeed + 6);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const e = random_idempotent(rng);
      auto const fg = rng() % 2 ? random_subset(rng, e.dom_gaps()) : random_gap_set(rng);
      auto const f = make(fg, fg);
      bool const by_definition = e * f == e && f * e == e;
      c.expect(natural_leq(e, f) == e.dom_gaps().includes(f.dom_gaps()), "order vs inclusion");
      c.expect(natural_leq(e, f) == by_definition, "order vs ef = fe = e");
      c.expect(semilattice_image(e * f) == set_union(semilattice_image(e), semilattice_image(f)), "homomorphism");
      c.expect(natural_leq(e, f) == semilattice_image(e).includes(semilattice_image(f)), "order preserved");
      c.expect(make(semilattice_image(e), semilattice_image(e)) == e, "image determines the idempotent");
    }
  });

  criterion(7, "up-set has 2^|D| elements (|D| <= 12); descending chains of length 20", [](Check& c) {
    Rng rng(kSeed + 7);
    for (std::size_t size = 0; size <= 12; ++size) {
      for (int rep = 0; rep < 10; ++rep) {
        auto g = random_gap_set(rng, 30, 12);
        while (g.size() != size) g = random_gap_set(rng, 30, 12);
        auto const e = make(g, g);
        auto const ups = up_set(e);
        c.expect(ups.size() == (std::size_t{1} << size), "up-set size for " + show(e));
        for (std::size_t k = 0; k < ups.size(); ++k) {
          c.expect(is_idempotent(ups[k]) && natural_leq(e, ups[k]), "member above e");
          if (k) c.expect(ups[k - 1] < ups[k], "members distinct and ordered");
        }
      }
    }
    for (std::size_t k = 0; k < kCases; ++k) {
      CofMap link = random_idempotent(rng);
      for (int step = 0; step < 20; ++step) {
        Int const next_gap = dom_bound(link);
        CofMap const below = link * make({next_gap}, {next_gap});
        c.expect(natural_leq(below, link) && below != link, "chain step strictly descends");
        link = below;
      }
    }
  });

  criterion(8, "solve_right / solve_left equal exhaustive search over 2^6 x 2^6 maps", [](Check& c) {
    auto const start = std::chrono::steady_clock::now();
    auto const universe = oracle::all_maps(6);
    Rng rng(kSeed + 8);
    // For a * x = b with gaps in [1,6] and |R_a| <= |D_a|, a maps the
    // non-gaps in [1,6] into [1,6], so every point above 6 is in dom x
    // and ran x contains ran b: all solutions have gaps in [1,6].  The left
    // equation is the mirror image with |D_a| <= |R_a|.
    auto draw_b = [&](CofMap const& a, bool right) {
      if (rng() % 2) {
        auto const x = random_map(rng, 6, 6);
        auto const b = right ? a * x : x * a;
        if (b.dom_gaps().max() <= 6 && b.ran_gaps().max() <= 6) return b;
      }
      return random_map(rng, 6, 6);
    };
    std::size_t nonempty = 0;
    for (int k = 0; k < 200; ++k) {
      CofMap a = random_map(rng, 6, 6);
      bool const right = k % 2 == 0;
      while (right ? a.ran_gaps().size() > a.dom_gaps().size() : a.dom_gaps().size() > a.ran_gaps().size()) {
        a = random_map(rng, 6, 6);
      }
      auto const b = draw_b(a, right);
      std::vector<CofMap> brute;
      for (auto const& x : universe) {
        if (right ? oracle::product_equals(a, x, b) : oracle::product_equals(x, a, b)) brute.push_back(x);
      }
      std::sort(brute.begin(), brute.end());
      auto const got = right ? solve_right(a, b) : solve_left(a, b);
      c.expect(got.solutions == brute, std::string(right ? "right" : "left") + " mismatch for " + show(a) + ", " +
                                           show(b) + ": " + std::to_string(got.solutions.size()) + " vs " +
                                           std::to_string(brute.size()));
      if (!brute.empty()) ++nonempty;
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
    c.expect(nonempty >= 50, "too few solvable instances sampled: " + std::to_string(nonempty));
  });

  criterion(9, "fresh bicyclic copy, tail projection, absorption, idempotent below, conjugation", [](Check& c) {
    Rng rng(kSeed + 9);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const e = random_idempotent(rng);
      auto const l = random_map(rng);

      auto const fb = fresh_bicyclic(e);
      c.expect(is_idempotent(fb.unit) && !in_shift_copy(fb.unit), "unit outside the shift copy");
      c.expect(natural_leq(fb.unit, e), "unit below e");
      c.expect(fb.forward * fb.back == fb.unit, "forward * back = unit");
      c.expect(fb.back * fb.forward != fb.unit, "back * forward is not the unit");
      for (std::uint64_t s = 0; s <= 6; ++s) {
        for (std::uint64_t t = 0; t <= 6; ++t) {
          c.expect(!in_shift_copy(fb.element({s, t})), "copy meets the shift copy at " + show(e));
        }
      }
      auto const x = random_bicyclic(rng, 6), y = random_bicyclic(rng, 6);
      c.expect(fb.element(x) * fb.element(y) == fb.element(x * y), "copy respects the bicyclic product");
      c.expect(x == y || fb.element(x) != fb.element(y), "copy is injective");

      auto const p = project_to_bicyclic(l);
      c.expect(in_shift_copy(p.shifted) && is_shift_copy_idempotent(p.tail), "projection lands in the shift copy");
      c.expect(l * p.tail == p.shifted * p.tail, "l eps = mu eps for " + show(l));
      c.expect(p.tail * l == p.tail * p.shifted, "eps l = eps mu for " + show(l));

      auto const ab = absorb_idempotent(e);
      c.expect(is_shift_copy_idempotent(ab.tail) && ab.product == e * ab.tail && is_shift_copy_idempotent(ab.product),
               "absorption");
      Int const k0 = dom_bound(ab.tail);
      for (Int extra = 0; extra < 3; ++extra) {
        auto const psi = tail_identity(k0 + extra + static_cast<Int>(rng() % 5));
        c.expect(natural_leq(psi, ab.tail) && e * psi == psi, "absorption second clause");
      }

      auto const below = bicyclic_idempotent_below(e);
      c.expect(is_shift_copy_idempotent(below) && natural_leq(below, e), "shift-copy idempotent below e");

      auto const cw = conjugation_witness(l);
      c.expect(cw.tail == p.tail, "conjugation uses the projection tail");
      c.expect(cw.conjugate == l * cw.tail * invert(l) && is_shift_copy_idempotent(cw.conjugate), "l eps l'");
      c.expect(cw.back_conjugate == invert(l) * cw.tail * l && is_shift_copy_idempotent(cw.back_conjugate),
               "l' eps l");
    }
  });

  criterion(10, "index homomorphism, surjectivity, congruence classes, four equivalent conditions", [](Check& c) {
    Rng rng(kSeed + 10);
    for (Int n = -10; n <= 10; ++n) {
      auto const w = n >= 0 ? make({}, GapSet::initial_segment(n)) : make(GapSet::initial_segment(-n), {});
      c.expect(shift_index(w) == n && oracle::top_shift(oracle::tabulate(w, kTruncation)) == n,
               "no witness for index " + std::to_string(n));
    }
    std::vector<CofMap> tails;
    for (Int k = 1; k <= 70; ++k) tails.push_back(tail_identity(k));
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const a = random_map(rng);
      CofMap b;
      switch (rng() % 3) {
        case 0: b = a * random_idempotent(rng); break;
        case 1: b = random_map(rng); break;
        default: {
          // same index, unrelated gaps
          b = random_map(rng);
          while (shift_index(b) != shift_index(a)) b = random_map(rng);
        }
      }
      c.expect(shift_index(a * b) == shift_index(a) + shift_index(b), "index homomorphism");

      bool const same_index = shift_index(a) == shift_index(b);
      auto const ta = oracle::tabulate(a, kTruncation), tb = oracle::tabulate(b, kTruncation);
      bool const agree_on_tail = tables_agree_from(ta, tb, 150);
      auto const w = group_congruence(a, b);
      c.expect(w.related == same_index && w.related == agree_on_tail, "congruence class vs index fibre");

      // (ii) some idempotent e with e a = e b; (iii) such e in the shift
      // copy; (iv) a e = b e with e in the shift copy.  Searched over tail
      // identities and random idempotents, independent of the witness.
      bool left_shift_copy = false, right_shift_copy = false;
      for (auto const& t : tails) {
        left_shift_copy = left_shift_copy || t * a == t * b;
        right_shift_copy = right_shift_copy || a * t == b * t;
      }
      bool left_any = left_shift_copy;
      for (int r = 0; r < 10 && !left_any; ++r) {
        auto const e = random_idempotent(rng, 70, 40);
        left_any = e * a == e * b;
      }
      c.expect(left_any == same_index && left_shift_copy == same_index && right_shift_copy == same_index,
               "four conditions disagree for " + show(a) + ", " + show(b));
      if (w.related) {
        c.expect(is_shift_copy_idempotent(*w.left) && *w.left * a == *w.left * b, "left witness");
        c.expect(is_shift_copy_idempotent(*w.right) && a * *w.right == b * *w.right, "right witness");
      }
      auto const d = random_map(rng);
      if (w.related) {
        c.expect(group_congruence(d * a, d * b).related && group_congruence(a * d, b * d).related, "congruence");
      }
    }
  });

  criterion(11, "bicyclic normal forms match pq -> 1 rewriting; embedding is an injective homomorphism", [](Check& c) {
    Rng rng(kSeed + 11);
    for (std::size_t k = 0; k < kCases; ++k) {
      auto const x = random_bicyclic(rng, 20), y = random_bicyclic(rng, 20);
      c.expect(x * y == oracle::rewrite_product(x, y), "normal form product");
      c.expect(embed(x * y) == embed(x) * embed(y), "embedding is a homomorphism");
      c.expect(as_bicyclic(embed(x)) == x, "round trip");
      c.expect((x == y) == (embed(x) == embed(y)), "embedding is injective");
      c.expect(shift_index(embed(x)) == static_cast<Int>(x.n) - static_cast<Int>(x.m), "index of the embedding");
    }
  });

  criterion(12, "zero-adjoined and adjunction semigroups; neighbourhood bounds; canonical order consistency",
            [](Check& c) {
              Rng rng(kSeed + 12);
              auto pick_zero = [&]() -> ZeroElement {
                if (rng() % 4 == 0) return AdjoinedZero{};
                return random_map(rng);
              };
              auto pick_adj = [&]() -> AdjElement {
                if (rng() % 2) return GroupInt{static_cast<Int>(rng() % 41) - 20};
                return random_map(rng);
              };
              for (std::size_t k = 0; k < kCases; ++k) {
                auto const x = pick_zero(), y = pick_zero(), z = pick_zero();
                c.expect(zero_mul(zero_mul(x, y), z) == zero_mul(x, zero_mul(y, z)), "zero_mul associativity");
                c.expect(zero_mul(AdjoinedZero{}, x) == ZeroElement{AdjoinedZero{}} &&
                             zero_mul(x, AdjoinedZero{}) == ZeroElement{AdjoinedZero{}},
                         "zero absorbs");
                auto const u = pick_adj(), v = pick_adj(), w = pick_adj();
                c.expect(adj_mul(adj_mul(u, v), w) == adj_mul(u, adj_mul(v, w)), "adj_mul associativity");

                Int const i = 1 + static_cast<Int>(rng() % 6);
                auto const g = random_deep_map(rng, i), h = random_deep_map(rng, i);
                c.expect(in_zero_nbhd(i, g) && in_zero_nbhd(i, g * h), "U_i * U_i inside U_i");
                c.expect(in_zero_nbhd(i, invert(g)), "U_i closed under inversion");
                auto const a = random_map(rng);
                Int const j = zero_nbhd_stability(i, a);
                c.expect(j == i + static_cast<Int>(std::max(a.dom_gaps().size(), a.ran_gaps().size())), "j formula");
                auto const d = random_deep_map(rng, j);
                c.expect(in_zero_nbhd(i, d * a) && in_zero_nbhd(i, a * d), "translation stability");

                // anchors and restrictions
                auto const anchor = random_map(rng);
                Int const idx = shift_index(anchor);
                auto const restricted = anchor * random_idempotent(rng);
                auto const other = random_map(rng);
                for (auto const& b : {restricted, other, anchor}) {
                  bool const expected = shift_index(b) == idx && !canonical_leq(anchor, b);
                  c.expect(in_adj_nbhd(idx, anchor, b) == expected, "membership vs canonical order");
                }
                c.expect(in_adj_nbhd(idx, anchor, GroupInt{idx}), "x lies in U(x)");
                c.expect(canonical_leq(restricted, anchor), "restriction is below its source");
                if (restricted != anchor) {
                  c.expect(in_adj_nbhd(idx, anchor, restricted) && !in_adj_nbhd(idx, restricted, anchor),
                           "antisymmetric membership for " + show(anchor));
                }
              }
            });

  criterion(13, "CLI: render/parse round trip; documented commands byte-exact in --json mode", [](Check& c) {
    Rng rng(kSeed + 13);
    for (std::size_t k = 0; k < kCases; ++k) {
      Value v;
      switch (rng() % 4) {
        case 0: v = random_map(rng); break;
        case 1: v = random_bicyclic(rng); break;
        case 2: v = GroupInt{static_cast<Int>(rng() % 2001) - 1000}; break;
        default: v = AdjoinedZero{}; break;
      }
      c.expect(eval_text(render(v)) == v, "round trip of " + render(v));
    }
    auto run = [](std::vector<std::string> args) {
      std::istringstream in;
      std::ostringstream out, err;
      int const status = cli::run_command(std::move(args), {in, out, err});
      return std::make_pair(status, out.str());
    };
    auto const f = run({"f", "m[1,2,3;5]", "--json"});
    c.expect(f.first == 0 && f.second == "-2\n", "f output: " + f.second);
    auto const g = run({"green", "R", "m[;1]", "m[;2]", "--json"});
    c.expect(g.first == 0 && g.second == "true\n", "green output: " + g.second);
    auto const s = run({"solve", "right", "m[;1]", "m[;1]", "--json"});
    std::string const expected =
        R"({"equation":{"side":"right","form":"a*x=b","a":{"dom_gaps":[],"ran_gaps":[1]},)"
        R"("b":{"dom_gaps":[],"ran_gaps":[1]}},"solutions":[{"dom_gaps":[],"ran_gaps":[]},)"
        R"({"dom_gaps":[1],"ran_gaps":[1]}]})"
        "\n";
    c.expect(s.first == 0 && s.second == expected, "solve output: " + s.second);
  });

  double const total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("acceptance: %d of 13 criteria failed, %.2fs total (target < 60s)\n", g_failed, total);
  return g_failed == 0 && total < 60.0 ? 0 : 1;
}
