#pragma once

// A small expression language over the four carriers.
//
//   elem := "m[" gaps ";" gaps "]" | "b[" nat "," nat "]" | "z[" int "]" | "O" | "id"
//   gaps := "" | nat ("," nat)*
//   expr := term ("*" term)*
//   term := (elem | "(" expr ")") "'"*
//
// `*` composes left to right, so "m[;1] * m[1;]" is the shift up followed by
// the shift down.  `'` inverts.  Whitespace is ignored between tokens.

#include <cctype>
#include <cstddef>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cofin/bicyclic.hpp"
#include "cofin/cof_map.hpp"
#include "cofin/error.hpp"
#include "cofin/extensions.hpp"
#include "cofin/serialize.hpp"

namespace cofin {

using Value = std::variant<CofMap, Bicyclic, GroupInt, AdjoinedZero>;

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr {
  struct Literal {
    Value value;
  };
  struct Product {
    std::unique_ptr<Expr> lhs;
    std::unique_ptr<Expr> rhs;
  };
  struct Inverse {
    std::unique_ptr<Expr> operand;
  };

  std::variant<Literal, Product, Inverse> node;
  Span span;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_space();
    if (at_end()) fail("empty expression", pos_, 0);
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const& what, std::size_t at, std::size_t len = 1) const {
    throw ParseError(what + " at position " + std::to_string(at), at, len);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended", pos_, 0);
      fail(std::string("expected '") + c + "'", pos_);
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (accept('*')) {
      Expr rhs = parse_term();
      Span span{lhs.span.begin, rhs.span.end};
      lhs = Expr{Expr::Product{std::make_unique<Expr>(std::move(lhs)), std::make_unique<Expr>(std::move(rhs))},
                 span};
    }
    return lhs;
  }

  Expr parse_term() {
    skip_space();
    std::size_t const start = pos_;
    Expr e;
    if (accept('(')) {
      e = parse_expr();
      expect(')');
      e.span = {start, pos_};
    } else {
      e = parse_elem();
    }
    while (accept('\'')) {
      e = Expr{Expr::Inverse{std::make_unique<Expr>(std::move(e))}, {start, pos_}};
    }
    return e;
  }

  Expr parse_elem() {
    skip_space();
    std::size_t const start = pos_;
    if (at_end()) fail("expected an element but input ended", pos_, 0);
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      return literal(CofMap{}, start);
    }
    char const head = text_[pos_];
    ++pos_;
    switch (head) {
      case 'O':
        return literal(AdjoinedZero{}, start);
      case 'm': {
        expect('[');
        GapSet dom = parse_gaps();
        expect(';');
        GapSet ran = parse_gaps();
        expect(']');
        return literal(make(std::move(dom), std::move(ran)), start);
      }
      case 'b': {
        expect('[');
        Int const m = parse_integer(false);
        expect(',');
        Int const n = parse_integer(false);
        expect(']');
        return literal(Bicyclic{static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)}, start);
      }
      case 'z': {
        expect('[');
        Int const k = parse_integer(true);
        expect(']');
        return literal(GroupInt{k}, start);
      }
      default:
        fail(std::string("unexpected '") + head + "'; expected m[..;..], b[..,..], z[..], O, id or '('", start);
    }
  }

  Expr literal(Value v, std::size_t start) const { return Expr{Expr::Literal{std::move(v)}, {start, pos_}}; }

  GapSet parse_gaps() {
    skip_space();
    std::vector<Int> values;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      do {
        skip_space();
        std::size_t const at = pos_;
        Int const v = parse_integer(false);
        if (v < 1) fail("gap entries must be positive", at, pos_ - at);
        if (!values.empty() && values.back() >= v) fail("gap entries must be strictly increasing", at, pos_ - at);
        values.push_back(v);
      } while (accept(','));
    }
    return GapSet(std::move(values));
  }

  Int parse_integer(bool allow_sign) {
    skip_space();
    std::size_t const start = pos_;
    bool negative = false;
    if (allow_sign && !at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer", pos_);
    Int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int const digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<Int>::max() - digit) / 10) fail("integer out of range", start, pos_ - start + 1);
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string kind_name(Value const& v) {
  switch (v.index()) {
    case 0: return "map";
    case 1: return "bicyclic";
    case 2: return "int";
    default: return "zero";
  }
}

inline Value multiply(Value const& x, Value const& y, Span span) {
  auto promote = [](Value const& v) -> std::optional<CofMap> {
    if (auto const* g = std::get_if<CofMap>(&v)) return *g;
    if (auto const* b = std::get_if<Bicyclic>(&v)) return embed(*b);
    return std::nullopt;
  };
  if (auto const* a = std::get_if<Bicyclic>(&x)) {
    if (auto const* b = std::get_if<Bicyclic>(&y)) return *a * *b;
  }
  auto const gx = promote(x);
  auto const gy = promote(y);
  if (gx && gy) return compose(*gx, *gy);

  bool const x_int = std::holds_alternative<GroupInt>(x);
  bool const y_int = std::holds_alternative<GroupInt>(y);
  bool const x_zero = std::holds_alternative<AdjoinedZero>(x);
  bool const y_zero = std::holds_alternative<AdjoinedZero>(y);
  if ((x_int || gx) && (y_int || gy)) {
    AdjElement const ax = gx ? AdjElement{*gx} : AdjElement{std::get<GroupInt>(x)};
    AdjElement const ay = gy ? AdjElement{*gy} : AdjElement{std::get<GroupInt>(y)};
    return std::get<GroupInt>(adj_mul(ax, ay));
  }
  if ((x_zero || gx) && (y_zero || gy)) return AdjoinedZero{};
  throw TypeError("no product between " + kind_name(x) + " and " + kind_name(y) + " at position " +
                      std::to_string(span.begin),
                  span.begin, span.end - span.begin);
}

}  // namespace detail

// Throws ParseError with the offending position.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// Bicyclic operands meet maps through the embedding; an int or the zero
// absorbs a map.  Throws TypeError on int * zero and on inverting an int or
// the zero.
inline Value eval_expr(Expr const& e) {
  return std::visit(
      [&](auto const& node) -> Value {
        using Node = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<Node, Expr::Literal>) {
          return node.value;
        } else if constexpr (std::is_same_v<Node, Expr::Product>) {
          return detail::multiply(eval_expr(*node.lhs), eval_expr(*node.rhs), e.span);
        } else {
          Value const v = eval_expr(*node.operand);
          if (auto const* g = std::get_if<CofMap>(&v)) return invert(*g);
          if (auto const* b = std::get_if<Bicyclic>(&v)) return inverse(*b);
          throw TypeError("cannot invert " + detail::kind_name(v) + " at position " + std::to_string(e.span.begin),
                          e.span.begin, e.span.end - e.span.begin);
        }
      },
      e.node);
}

inline Value eval_text(std::string_view text) { return eval_expr(parse(text)); }

inline std::string render(GapSet const& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out;
}

inline std::string render(CofMap const& g) { return "m[" + render(g.dom_gaps()) + ";" + render(g.ran_gaps()) + "]"; }

inline std::string render(Value const& v) {
  if (auto const* g = std::get_if<CofMap>(&v)) return render(*g);
  if (auto const* b = std::get_if<Bicyclic>(&v)) return "b[" + std::to_string(b->m) + "," + std::to_string(b->n) + "]";
  if (auto const* n = std::get_if<GroupInt>(&v)) return "z[" + std::to_string(n->value) + "]";
  return "O";
}

inline Json to_json(Value const& v) {
  return std::visit([](auto const& x) { return to_json(x); }, v);
}

// First `columns` columns of the two-row notation, each row closed by "…".
inline std::string two_row(CofMap const& g, std::size_t columns) {
  std::vector<std::string> top, bottom;
  Int n = 1;
  while (top.size() < columns) {
    if (auto image = evaluate(g, n)) {
      top.push_back(std::to_string(n));
      bottom.push_back(std::to_string(*image));
    }
    ++n;
  }
  std::ostringstream out;
  for (int row = 0; row < 2; ++row) {
    auto const& cells = row == 0 ? top : bottom;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      auto const width = std::max(top[k].size(), bottom[k].size());
      out << std::string(width - cells[k].size(), ' ') << cells[k] << ' ';
    }
    out << "…\n";
  }
  return out.str();
}

}  // namespace cofin
