#pragma once

// Command-line front end.  run_command takes the argument list without the
// program name and returns the process exit status:
//   0 success, 1 domain error (a violated precondition), 2 parse or usage error.

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cofin/bicyclic.hpp"
#include "cofin/cof_map.hpp"
#include "cofin/error.hpp"
#include "cofin/expr.hpp"
#include "cofin/extensions.hpp"
#include "cofin/green.hpp"
#include "cofin/serialize.hpp"
#include "cofin/random.hpp"
#include "cofin/selftest.hpp"

namespace cofin::cli {

inline constexpr char const* output_env_var = "COFIN_OUTPUT";

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

class Session {
 public:
  Session(Streams io, bool json) : io_(io), json_(json) {}

  bool json() const { return json_; }
  void set_json(bool on) { json_ = on; }
  void set_rows(std::size_t rows) { rows_ = rows; }

  Value value(std::string const& source) { return eval_text(text(source)); }

  CofMap map(std::string const& source) {
    Value const v = value(source);
    if (auto const* g = std::get_if<CofMap>(&v)) return *g;
    if (auto const* b = std::get_if<Bicyclic>(&v)) return embed(*b);
    throw DomainError("expected a map, got " + render(v) + " from \"" + source + "\"");
  }

  CofMap idempotent(std::string const& source) {
    CofMap g = map(source);
    if (!is_idempotent(g)) throw DomainError("expected an idempotent, got " + render(g));
    return g;
  }

  void emit(Json const& machine, std::string const& human) {
    if (json_) {
      io_.out << machine.dump() << '\n';
    } else {
      io_.out << human << '\n';
    }
  }

  void emit_map(CofMap const& g) {
    if (json_) {
      io_.out << to_json(g).dump() << '\n';
      return;
    }
    io_.out << render(g) << '\n';
    if (rows_) io_.out << two_row(g, rows_);
  }

  void emit_bool(bool b) { emit(Json(b), b ? "true" : "false"); }

  void emit_labelled(std::vector<std::pair<std::string, CofMap>> const& parts) {
    if (json_) {
      Json j = Json::object();
      for (auto const& [label, g] : parts) j[label] = to_json(g);
      io_.out << j.dump() << '\n';
      return;
    }
    for (auto const& [label, g] : parts) {
      io_.out << label << ": " << render(g) << '\n';
      if (rows_) io_.out << two_row(g, rows_);
    }
  }

  void emit_maps(std::vector<CofMap> const& maps) {
    if (json_) {
      Json j = Json::array();
      for (auto const& g : maps) j.push_back(to_json(g));
      io_.out << j.dump() << '\n';
      return;
    }
    for (auto const& g : maps) io_.out << render(g) << '\n';
  }

  std::ostream& out() { return io_.out; }

 private:
  // "-" reads the expression from standard input (once).
  std::string text(std::string const& source) {
    if (source != "-") return source;
    if (!stdin_text_) {
      stdin_text_ = std::string(std::istreambuf_iterator<char>(io_.in), {});
    }
    return *stdin_text_;
  }

  Streams io_;
  bool json_;
  std::size_t rows_ = 0;
  std::optional<std::string> stdin_text_;
};

inline Int parse_int_arg(std::string const& s, char const* what) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(std::string(what) + " must be an integer, got \"" + s + "\"");
  return v;
}

}  // namespace detail

inline int run_command(std::vector<std::string> args, Streams io, bool json_default = false) {
  CLI::App app{"Exact computation with monotone injective partial maps of the positive integers "
               "with cofinite domain and range.  '*' composes left to right."};
  app.name("cofin");
  app.require_subcommand(1);

  bool json = false;
  bool text = false;
  std::size_t rows = 0;
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "machine-readable JSON output");
    sub->add_flag("--text", text, "human-readable output (overrides " + std::string(output_env_var) + ")");
    sub->add_option("--rows", rows, "also print the first K columns of the two-row notation")
        ->check(CLI::NonNegativeNumber);
  };

  std::vector<std::string> operands;
  std::string mode;
  std::function<void(detail::Session&)> action;

  // `selector`, when given, is a leading positional restricted to `choices`.
  auto command = [&](std::string const& name, std::string const& help,
                     std::vector<std::string> const& operand_names, auto body, std::string const& selector = {},
                     std::vector<std::string> const& choices = {}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_output_flags(sub);
    if (!selector.empty()) sub->add_option(selector, mode)->required()->check(CLI::IsMember(choices));
    for (auto const& op : operand_names) {
      sub->add_option(op)->required();
    }
    sub->callback([&, sub, operand_names, body] {
      operands.clear();
      for (auto const& op : operand_names) operands.push_back(sub->get_option(op)->as<std::string>());
      action = [&, body](detail::Session& s) { body(s, operands); };
    });
    return sub;
  };

  using Ops = std::vector<std::string> const&;

  command("eval", "evaluate an expression", {"EXPR"}, [](detail::Session& s, Ops o) {
    Value const v = s.value(o[0]);
    if (auto const* g = std::get_if<CofMap>(&v)) return s.emit_map(*g);
    s.emit(to_json(v), render(v));
  });
  command("apply", "image of N under a map", {"EXPR", "N"}, [](detail::Session& s, Ops o) {
    auto const image = evaluate(s.map(o[0]), detail::parse_int_arg(o[1], "N"));
    s.emit(image ? Json(*image) : Json(nullptr), image ? std::to_string(*image) : "undefined");
  });
  command("f", "shift index |R| - |D|", {"EXPR"}, [](detail::Session& s, Ops o) {
    Int const f = shift_index(s.map(o[0]));
    s.emit(Json(f), std::to_string(f));
  });
  command("tail", "least point from which the map is a plain shift", {"EXPR"}, [](detail::Session& s, Ops o) {
    Int const t = tail_threshold(s.map(o[0]));
    s.emit(Json(t), std::to_string(t));
  });
  command(
      "green", "Green's relation R, L, H or D", {"E1", "E2"},
      [&mode](detail::Session& s, Ops o) {
        auto const a = s.map(o[0]), b = s.map(o[1]);
        bool const r = mode == "R"   ? green_r(a, b)
                       : mode == "L" ? green_l(a, b)
                       : mode == "H" ? green_h(a, b)
                                     : green_d(a, b);
        s.emit_bool(r);
      },
      "RELATION", {"R", "L", "H", "D"});
  command(
      "leq", "natural order on idempotents or canonical order", {"E1", "E2"},
      [&mode](detail::Session& s, Ops o) {
        auto const a = s.map(o[0]), b = s.map(o[1]);
        s.emit_bool(mode == "nat" ? natural_leq(a, b) : canonical_leq(a, b));
      },
      "ORDER", {"nat", "canon"});
  command("connect", "the element x with x x' = E1 and x' x = E2", {"E1", "E2"}, [](detail::Session& s, Ops o) {
    s.emit_map(connect_idempotents(s.idempotent(o[0]), s.idempotent(o[1])));
  });
  command("simple-witness", "maps l, r with l * E1 * r = E2", {"E1", "E2"}, [](detail::Session& s, Ops o) {
    auto const w = simplicity_witness(s.map(o[0]), s.map(o[1]));
    s.emit_labelled({{"left", w.left}, {"right", w.right}});
  });
  command(
      "solve", "all x with A * x = B (right) or x * A = B (left)", {"A", "B"},
      [&mode](detail::Session& s, Ops o) {
        auto const a = s.map(o[0]), b = s.map(o[1]);
        auto const set = mode == "right" ? solve_right(a, b) : solve_left(a, b);
        if (s.json()) {
          s.out() << to_json(set).dump() << '\n';
        } else if (set.solutions.empty()) {
          s.out() << "no solutions\n";
        } else {
          s.emit_maps(set.solutions);
        }
      },
      "SIDE", {"right", "left"});
  command("upset", "all idempotents above an idempotent", {"E"}, [](detail::Session& s, Ops o) {
    s.emit_maps(up_set(s.idempotent(o[0])));
  });
  command("bc-member", "bicyclic normal form, if the map lies in the shift copy", {"E"},
          [](detail::Session& s, Ops o) {
            auto const x = as_bicyclic(s.map(o[0]));
            s.emit(x ? to_json(*x) : Json(nullptr), x ? render(Value{*x}) : "absent");
          });
  command("fresh-bicyclic", "a bicyclic submonoid below E avoiding the shift copy", {"E"},
          [](detail::Session& s, Ops o) {
            auto const fb = fresh_bicyclic(s.idempotent(o[0]));
            s.emit_labelled({{"unit", fb.unit}, {"forward", fb.forward}, {"back", fb.back}});
          });
  command("project-c", "shift-copy element agreeing with E on a tail", {"E"}, [](detail::Session& s, Ops o) {
    auto const p = project_to_bicyclic(s.map(o[0]));
    s.emit_labelled({{"shifted", p.shifted}, {"tail", p.tail}});
  });
  command("below-c", "shift-copy idempotent below an idempotent", {"E"}, [](detail::Session& s, Ops o) {
    s.emit_map(bicyclic_idempotent_below(s.idempotent(o[0])));
  });
  command("conj-witness", "tail idempotent whose conjugates lie in the shift copy", {"E"},
          [](detail::Session& s, Ops o) {
            auto const w = conjugation_witness(s.map(o[0]));
            s.emit_labelled({{"tail", w.tail}, {"conjugate", w.conjugate}, {"back_conjugate", w.back_conjugate}});
          });
  command("gcong", "least group congruence with witnesses", {"A", "B"}, [](detail::Session& s, Ops o) {
    auto const w = group_congruence(s.map(o[0]), s.map(o[1]));
    if (s.json()) {
      s.out() << Json{{"related", w.related},
                      {"left", w.left ? to_json(*w.left) : Json(nullptr)},
                      {"right", w.right ? to_json(*w.right) : Json(nullptr)}}
                     .dump()
              << '\n';
      return;
    }
    s.out() << (w.related ? "true" : "false") << '\n';
    if (w.related) s.out() << "left: " << render(*w.left) << "\nright: " << render(*w.right) << '\n';
  });
  command("nbhd-zero", "membership in the depth-I neighbourhood of the zero", {"I", "E"},
          [](detail::Session& s, Ops o) {
            Int const i = detail::parse_int_arg(o[0], "I");
            Value const v = s.value(o[1]);
            ZeroElement x = AdjoinedZero{};
            if (!std::holds_alternative<AdjoinedZero>(v)) x = s.map(o[1]);
            s.emit_bool(in_zero_nbhd(i, x));
          });
  command("nbhd-adj", "membership in U_ANCHOR(X) of the adjunction semigroup", {"X", "ANCHOR", "E"},
          [](detail::Session& s, Ops o) {
            Int const x = detail::parse_int_arg(o[0], "X");
            CofMap const anchor = s.map(o[1]);
            Value const v = s.value(o[2]);
            AdjElement elem = GroupInt{};
            if (auto const* n = std::get_if<GroupInt>(&v)) {
              elem = *n;
            } else {
              elem = s.map(o[2]);
            }
            s.emit_bool(in_adj_nbhd(x, anchor, elem));
          });
  command("stability", "translation depth j for the zero neighbourhoods, with a sampled check", {"I", "A"},
          [](detail::Session& s, Ops o) {
            Int const i = detail::parse_int_arg(o[0], "I");
            CofMap const a = s.map(o[1]);
            Int const j = zero_nbhd_stability(i, a);
            Rng rng(1);
            std::size_t const samples = 1000;
            std::size_t violations = 0;
            for (std::size_t k = 0; k < samples; ++k) {
              auto g = random_deep_map(rng, j);
              if (!in_zero_nbhd(i, g * a) || !in_zero_nbhd(i, a * g)) ++violations;
            }
            s.emit(Json{{"j", j}, {"samples", samples}, {"violations", violations}}, std::to_string(j));
          });

  std::uint64_t seed = 20100401;
  std::size_t cases = 1000;
  auto* selftest = app.add_subcommand("selftest", "run the algebraic property suite");
  add_output_flags(selftest);
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--cases", cases, "cases per property");
  selftest->callback([&] {
    action = [&](detail::Session& s) {
      auto const results = run_selftest(seed, cases);
      std::size_t failed = 0;
      Json j = Json::array();
      for (auto const& r : results) {
        failed += r.failed;
        j.push_back({{"property", r.name}, {"passed", r.passed}, {"failed", r.failed}});
      }
      if (s.json()) {
        s.out() << j.dump() << '\n';
      } else {
        for (auto const& r : results) {
          s.out() << (r.failed ? "FAIL " : "ok   ") << r.name << ": " << r.passed << "/" << (r.passed + r.failed)
                  << '\n';
        }
      }
      if (failed) throw DomainError(std::to_string(failed) + " property cases failed");
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, io.out, io.err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, io.out, io.err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, io.out, io.err);
    return 2;
  }

  detail::Session session(io, (json_default || json) && !text);
  session.set_rows(rows);
  try {
    action(session);
  } catch (ParseError const& e) {
    io.err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::invalid_argument const& e) {
    io.err << "error: " << e.what() << '\n';
    return 2;
  } catch (DomainError const& e) {
    io.err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cofin::cli
