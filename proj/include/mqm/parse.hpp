// Parsers for the two input forms: list-form specs like
// "n=4 m(4,5,6,8,9,10,13) d(0,7,15)" and SOP expressions like "AD + ABC",
// plus canonical expansion with blowup statistics.
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "mqm/core.hpp"

namespace mqm {

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownVariableError : ParseError {
  using ParseError::ParseError;
};

struct ContradictoryLiteralError : ParseError {
  using ParseError::ParseError;
};

// A sum of products over an ordered, distinct, single-letter alphabet.
struct SopExpression {
  std::string alphabet;
  std::vector<Term> terms;  // each sized to the alphabet
};

struct ExpansionStats {
  std::size_t input_term_count = 0;
  std::size_t canonical_minterm_count = 0;
  std::int64_t added = 0;  // canonical_minterm_count - input_term_count
};

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  bool eat(char c) {
    if (done() || peek() != c) return false;
    ++pos;
    return true;
  }
};

inline std::uint64_t parse_int(Cursor& c) {
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected integer", c.pos);
  std::uint64_t v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + static_cast<std::uint64_t>(c.peek() - '0');
    if (v > 0xFFFFFFFFull) throw RangeError("integer too large");
    ++c.pos;
  }
  return v;
}

// "(" INTLIST ")" with values range-checked against 2^n.  The list may be
// empty; whitespace is allowed anywhere between tokens.
inline std::set<Minterm> parse_int_list(Cursor& c, unsigned n, const char* what) {
  if (!c.eat('(')) throw ParseError("expected '('", c.pos);
  std::set<Minterm> out;
  c.skip_ws();
  if (c.eat(')')) return out;
  while (true) {
    c.skip_ws();
    const std::uint64_t v = parse_int(c);
    if (v >= (std::uint64_t{1} << n))
      throw RangeError(std::string(what) + " " + std::to_string(v) +
                       " out of range for n=" + std::to_string(n));
    out.insert(static_cast<Minterm>(v));
    c.skip_ws();
    if (c.eat(',')) continue;
    if (c.eat(')')) return out;
    throw ParseError("expected ',' or ')'", c.pos);
  }
}

inline void check_alphabet(std::string_view alphabet) {
  if (alphabet.empty()) throw Error("alphabet must not be empty");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!std::isalpha(static_cast<unsigned char>(alphabet[i])))
      throw Error("alphabet entries must be letters");
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j]) throw Error("alphabet letters must be distinct");
  }
}

}  // namespace detail

// spec := "n=" INT WS* "m(" INTLIST ")" (WS* "d(" INTLIST ")")?
inline BooleanFunction parse_function_spec(std::string_view text) {
  detail::Cursor c{text};
  c.skip_ws();
  if (!c.eat('n')) throw ParseError("expected 'n='", c.pos);
  c.skip_ws();
  if (!c.eat('=')) throw ParseError("expected '=' after 'n'", c.pos);
  c.skip_ws();
  const std::uint64_t n = detail::parse_int(c);
  if (n < 1 || n > kMaxVariables)
    throw RangeError("variable count must be between 1 and " +
                     std::to_string(kMaxVariables) + ", got " + std::to_string(n));
  c.skip_ws();
  if (!c.eat('m')) throw ParseError("expected 'm('", c.pos);
  c.skip_ws();
  std::set<Minterm> care = detail::parse_int_list(c, static_cast<unsigned>(n), "minterm");
  c.skip_ws();
  std::set<Minterm> dc;
  if (!c.done() && c.peek() == 'd') {
    ++c.pos;
    c.skip_ws();
    dc = detail::parse_int_list(c, static_cast<unsigned>(n), "don't-care");
    c.skip_ws();
  }
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return BooleanFunction(static_cast<unsigned>(n), std::move(care), std::move(dc));
}

// '+'-separated products; apostrophe marks a complemented variable; an
// optional leading "Y =" (any letter) is accepted and ignored.  Whitespace is
// insignificant.  A repeated literal is idempotent; X together with X' in one
// product is rejected.
inline SopExpression parse_sop_expression(std::string_view text, std::string_view alphabet) {
  detail::check_alphabet(alphabet);
  const unsigned n = static_cast<unsigned>(alphabet.size());
  detail::Cursor c{text};
  c.skip_ws();
  {  // assignment prefix
    detail::Cursor save = c;
    if (!c.done() && std::isalpha(static_cast<unsigned char>(c.peek()))) {
      ++c.pos;
      c.skip_ws();
      if (!c.eat('=')) c = save;
    }
  }
  SopExpression expr;
  expr.alphabet = std::string(alphabet);
  while (true) {
    Term t;
    t.literals.assign(n, Literal::absent);
    bool any = false;
    while (true) {
      c.skip_ws();
      if (c.done() || c.peek() == '+') break;
      const std::size_t at = c.pos;
      const char letter = c.peek();
      if (!std::isalpha(static_cast<unsigned char>(letter)))
        throw ParseError("expected variable name", at);
      const std::size_t idx = alphabet.find(letter);
      if (idx == std::string_view::npos)
        throw UnknownVariableError(std::string("unknown variable '") + letter + "'", at);
      ++c.pos;
      c.skip_ws();
      const Literal lit = c.eat('\'') ? Literal::negative : Literal::positive;
      if (t.literals[idx] != Literal::absent && t.literals[idx] != lit)
        throw ContradictoryLiteralError(
            std::string("contradictory literal for variable '") + letter + "'", at);
      t.literals[idx] = lit;
      any = true;
    }
    if (!any) throw ParseError("expected product term", c.pos);
    expr.terms.push_back(std::move(t));
    c.skip_ws();
    if (c.done()) break;
    if (!c.eat('+')) throw ParseError("expected '+'", c.pos);
  }
  return expr;
}

// Expand every term over its absent variables and collect the canonical
// minterm set.  `added` reports how far the canonical form blew up.
inline std::pair<BooleanFunction, ExpansionStats> canonicalize(const SopExpression& expr) {
  const unsigned n = static_cast<unsigned>(expr.alphabet.size());
  std::set<Minterm> care;
  for (const Term& t : expr.terms) {
    Minterm base = 0;
    Mask absent = 0;
    for (unsigned i = 0; i < n; ++i) {
      const Mask w = variable_weight(n, i);
      if (t.literals[i] == Literal::positive)
        base |= w;
      else if (t.literals[i] == Literal::absent)
        absent |= w;
    }
    Mask s = 0;
    do {
      care.insert(base | s);
      s = (s - absent) & absent;
    } while (s != 0);
  }
  ExpansionStats st;
  st.input_term_count = expr.terms.size();
  st.canonical_minterm_count = care.size();
  st.added = static_cast<std::int64_t>(st.canonical_minterm_count) -
             static_cast<std::int64_t>(st.input_term_count);
  return {BooleanFunction(n, std::move(care)), st};
}

inline std::string sop_to_text(const SopExpression& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    if (i) out += " + ";
    out += term_to_text(expr.terms[i], expr.alphabet);
  }
  return out;
}

// Inverse of parse_function_spec; the result re-parses to the same function.
inline std::string function_to_text(const BooleanFunction& f) {
  auto join = [](const std::set<Minterm>& s) {
    std::string out;
    for (Minterm m : s) {
      if (!out.empty()) out += ',';
      out += std::to_string(m);
    }
    return out;
  };
  std::string out = "n=" + std::to_string(f.n) + " m(" + join(f.minterms) + ")";
  if (!f.dont_cares.empty()) out += " d(" + join(f.dont_cares) + ")";
  return out;
}

}  // namespace mqm
