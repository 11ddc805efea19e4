#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "ideal.hpp"
#include "prime.hpp"
#include "series.hpp"

namespace vfilt {

namespace detail {

/// Single-pass cursor over one input string; all parse errors carry the
/// 1-based line and column of the offending character.
class TextCursor {
public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  /// Identifier: a letter or underscore, then letters, digits, underscores.
  std::string name() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
          text_[pos_] == '_'))
      fail("expected a name");
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  /// Nonnegative decimal integer.
  Int number() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    return Int(digits);
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, line_, col_);
  }

  /// Current (line, column), after whitespace.
  std::pair<std::size_t, std::size_t> where() {
    skip_ws();
    return {line_, col_};
  }

  void end() {
    if (!done()) fail("unexpected trailing input");
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

/// One factor of a generator, with its source position for late errors.
struct FactorText {
  std::string var;
  Int exp;
  std::size_t line;
  std::size_t col;
};

/// One generator as written: factors, or the constants "1" (identity
/// monomial) and "0" (no generator).
struct GeneratorText {
  bool is_one = false;
  bool is_zero = false;
  std::vector<FactorText> factors;
};

inline GeneratorText parse_generator_text(TextCursor& cur) {
  GeneratorText gen;
  while (true) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int value = cur.number();
      if (value == 1)
        gen.is_one = true;
      else if (value == 0)
        gen.is_zero = true;
      else
        cur.fail("numeric coefficients other than 0 and 1 are not monomials");
    } else {
      auto [line, col] = cur.where();
      std::string var = cur.name();
      Int exp = 1;
      if (cur.try_consume('^')) exp = cur.number();
      gen.factors.push_back({std::move(var), std::move(exp), line, col});
    }
    if (!cur.try_consume('*')) break;
  }
  if ((gen.is_one || gen.is_zero) && !gen.factors.empty())
    cur.fail("constants cannot be multiplied by variables");
  return gen;
}

}  // namespace detail

/// Parses "(x^2, x*y^4) in [x,y]" (optionally prefixed with the word
/// "ideal"); "(1)" is the unit ideal and "(0)" the zero ideal.
inline MonomialIdeal parse_ideal(const std::string& text) {
  detail::TextCursor cur(text);

  cur.skip_ws();
  if (cur.peek() != '(') {
    std::string kw = cur.name();
    if (kw != "ideal") cur.fail("expected 'ideal' or '('");
  }
  cur.expect('(');
  std::vector<detail::GeneratorText> gens;
  if (!cur.try_consume(')')) {
    gens.push_back(detail::parse_generator_text(cur));
    while (cur.try_consume(',')) gens.push_back(detail::parse_generator_text(cur));
    cur.expect(')');
  }

  std::string kw = cur.name();
  if (kw != "in") cur.fail("expected 'in' before the variable list");
  cur.expect('[');
  std::vector<std::string> variables;
  variables.push_back(cur.name());
  while (cur.try_consume(',')) variables.push_back(cur.name());
  cur.expect(']');
  cur.end();

  RingPtr ring = make_ring(variables);
  std::vector<Monomial> monomials;
  bool any_zero = false;
  for (const auto& g : gens) {
    if (g.is_zero) {
      any_zero = true;
      continue;
    }
    std::vector<Int> e(ring->size(), Int(0));
    for (const auto& f : g.factors) {
      if (!ring->has(f.var))
        throw parse_error("generator uses unknown variable '" + f.var + "'",
                          f.line, f.col);
      e[ring->index_of(f.var)] += f.exp;
    }
    monomials.emplace_back(std::move(e));
  }
  if (monomials.empty() && any_zero) return MonomialIdeal::zero(ring);
  if (monomials.empty()) throw parse_error("empty generator list", 1, 1);
  return MonomialIdeal(ring, std::move(monomials));
}

/// Parses "x3,x4" or "(x3,x4)" against an existing ring.
inline MonomialPrime parse_prime(const std::string& text, const RingPtr& ring) {
  detail::TextCursor cur(text);
  const bool parens = cur.try_consume('(');
  std::vector<std::string> names;
  names.push_back(cur.name());
  while (cur.try_consume(',')) names.push_back(cur.name());
  if (parens) cur.expect(')');
  cur.end();
  for (const auto& n : names)
    if (!ring->has(n))
      throw parse_error("prime uses unknown variable '" + n + "'", 1, 1);
  return MonomialPrime::from_names(ring, names);
}

/// Parses "A..B" into an inclusive sample range.
inline SampleRange parse_range(const std::string& text) {
  detail::TextCursor cur(text);
  Int lo = cur.number();
  cur.expect('.');
  cur.expect('.');
  Int hi = cur.number();
  cur.end();
  return SampleRange{lo, hi};
}

namespace detail {

inline FamilyTag parse_family_tag(TextCursor& cur) {
  std::string kind = cur.name();
  FamilyTag tag;
  tag.kind = kind;
  cur.expect('(');
  auto small = [&cur]() { return cur.number().convert_to<long>(); };
  if (kind == "K" || kind == "C" || kind == "hbip") {
    tag.a = small();
  } else if (kind == "Kb" || kind == "Kpend") {
    tag.a = small();
    cur.expect(',');
    tag.b = small();
  } else if (kind == "fakhari") {
    tag.inner = std::make_shared<FamilyTag>(parse_family_tag(cur));
    cur.expect(',');
    tag.a = small();
  } else {
    cur.fail("unknown graph family '" + kind + "'");
  }
  cur.expect(')');
  return tag;
}

}  // namespace detail

/// Parses family strings such as "Kb(2,3)", "C(5)", "Kpend(3,2)",
/// "hbip(2)", and "fakhari(K(3),2)" (families nest only under fakhari).
inline FamilyTag parse_family(const std::string& text) {
  detail::TextCursor cur(text);
  FamilyTag tag = detail::parse_family_tag(cur);
  cur.end();
  return tag;
}

/// Convenience: parse the family string and construct the graph.
inline Graph parse_graph(const std::string& text) {
  return build(parse_family(text));
}

}  // namespace vfilt
