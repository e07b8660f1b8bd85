// Core value types for two-level minimization: Boolean functions given as
// minterm sets, cubes in (least minterm, E-sum) encoding, and product terms.
#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mqm {

using Minterm = std::uint32_t;
using Mask = std::uint32_t;

inline constexpr unsigned kMaxVariables = 24;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value (n, minterm index, ...) outside its permitted range.
struct RangeError : Error {
  using Error::Error;
};

// A minterm listed as both care and don't-care.
struct OverlapError : Error {
  using Error::Error;
};

// A (least, esum) pair that does not describe a cube over n variables.
struct InvalidCubeError : Error {
  using Error::Error;
};

// Raised where an operation needs at least one minterm to work with.
struct EmptyFunctionError : Error {
  using Error::Error;
};

// An incompletely specified Boolean function of n variables.  Immutable by
// convention once constructed; operations on it are pure.
struct BooleanFunction {
  unsigned n;
  std::set<Minterm> minterms;    // care minterms (function is 1)
  std::set<Minterm> dont_cares;  // unconstrained minterms

  BooleanFunction(unsigned n_, std::set<Minterm> care, std::set<Minterm> dc = {})
      : n(n_), minterms(std::move(care)), dont_cares(std::move(dc)) {
    if (n < 1 || n > kMaxVariables)
      throw RangeError("variable count must be between 1 and " +
                       std::to_string(kMaxVariables) + ", got " + std::to_string(n));
    const Minterm limit = Minterm{1} << n;
    for (Minterm m : minterms)
      if (m >= limit)
        throw RangeError("minterm " + std::to_string(m) + " out of range for n=" +
                         std::to_string(n));
    for (Minterm m : dont_cares) {
      if (m >= limit)
        throw RangeError("don't-care " + std::to_string(m) + " out of range for n=" +
                         std::to_string(n));
      if (minterms.count(m))
        throw OverlapError("minterm " + std::to_string(m) +
                           " listed as both care and don't-care");
    }
  }
};

// A product term covering 2^popcount(esum) minterms.  `least` is the smallest
// covered minterm; `esum` is the sum of the positional weights of the
// eliminated variables.  Those weights are distinct powers of two, so esum
// doubles as the bitmask of eliminated positions and the largest covered
// minterm is always least + esum.
struct Cube {
  Minterm least = 0;
  Mask esum = 0;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

inline void validate_cube(Cube c, unsigned n) {
  if (n < 1 || n > kMaxVariables)
    throw RangeError("variable count must be between 1 and " +
                     std::to_string(kMaxVariables) + ", got " + std::to_string(n));
  const Minterm limit = Minterm{1} << n;
  if (c.least >= limit || c.esum >= limit)
    throw InvalidCubeError("cube (" + std::to_string(c.least) + "," +
                           std::to_string(c.esum) + ") has members out of range for n=" +
                           std::to_string(n));
  if (c.least & c.esum)
    throw InvalidCubeError("cube (" + std::to_string(c.least) + "," +
                           std::to_string(c.esum) +
                           ") overlaps its least minterm with eliminated weights");
}

// Every minterm the cube covers, ascending: least plus each subset sum of
// esum's bits.  (s - esum) & esum walks the submasks in increasing order.
inline std::vector<Minterm> cube_members(Cube c, unsigned n) {
  validate_cube(c, n);
  std::vector<Minterm> out;
  out.reserve(std::size_t{1} << std::popcount(c.esum));
  Mask s = 0;
  do {
    out.push_back(c.least + s);
    s = (s - c.esum) & c.esum;
  } while (s != 0);
  return out;
}

// True when the cube covers minterm m: m agrees with least on all fixed bits.
inline bool cube_covers(Cube c, Minterm m) { return (m & ~c.esum) == c.least; }

enum class Literal : std::uint8_t { positive, negative, absent };

// A product term over an ordered alphabet; literals[0] belongs to the most
// significant variable (weight 2^(n-1)).
struct Term {
  std::vector<Literal> literals;
  friend bool operator==(const Term&, const Term&) = default;
};

// Weight of variable i (0-based from the most significant).
inline Mask variable_weight(unsigned n, unsigned i) { return Mask{1} << (n - 1 - i); }

inline Term cube_to_term(Cube c, unsigned n) {
  validate_cube(c, n);
  Term t;
  t.literals.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    const Mask w = variable_weight(n, i);
    if (c.esum & w)
      t.literals.push_back(Literal::absent);
    else if (c.least & w)
      t.literals.push_back(Literal::positive);
    else
      t.literals.push_back(Literal::negative);
  }
  return t;
}

// Evaluate the term on one input combination.
inline bool term_matches(const Term& t, Minterm m) {
  const unsigned n = static_cast<unsigned>(t.literals.size());
  for (unsigned i = 0; i < n; ++i) {
    const bool bit = (m >> (n - 1 - i)) & 1u;
    if (t.literals[i] == Literal::positive && !bit) return false;
    if (t.literals[i] == Literal::negative && bit) return false;
  }
  return true;
}

inline unsigned term_literal_count(const Term& t) {
  unsigned k = 0;
  for (Literal l : t.literals)
    if (l != Literal::absent) ++k;
  return k;
}

// "AB'D'" style rendering; a term with no literals is the constant 1.
inline std::string term_to_text(const Term& t, std::string_view alphabet) {
  std::string out;
  for (std::size_t i = 0; i < t.literals.size(); ++i) {
    if (t.literals[i] == Literal::absent) continue;
    out += alphabet[i];
    if (t.literals[i] == Literal::negative) out += '\'';
  }
  if (out.empty()) out = "1";
  return out;
}

// First n upper-case letters, the rendering alphabet when none is declared.
inline std::string default_alphabet(unsigned n) {
  std::string a;
  for (unsigned i = 0; i < n; ++i) a += static_cast<char>('A' + i);
  return a;
}

struct GroupEntry {
  Cube cube;
  bool checked = false;  // set when the cube takes part in a combine
};

// Cubes bucketed by popcount of their least minterm; groups[g] is group g.
// The bucket index of a combined cube equals that of its lower constituent,
// so membership stays consistent across passes.
struct GroupTable {
  unsigned n = 0;
  std::vector<std::vector<GroupEntry>> groups;  // always n + 1 buckets

  bool empty() const {
    for (const auto& g : groups)
      if (!g.empty()) return false;
    return true;
  }
};

}  // namespace mqm
