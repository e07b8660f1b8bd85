// Shared oracles for the test suites.  Everything here recomputes expected
// values by a route independent of the code under test: truth-table scans,
// explicit bit enumeration, exhaustive subset search.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "mqm/core.hpp"

namespace testsupport {

using namespace mqm;

// The worked four-variable function exercised throughout the suites.
inline BooleanFunction reference_function() {
  return BooleanFunction(4, {4, 5, 6, 8, 9, 10, 13}, {0, 7, 15});
}

// Minterms a term evaluates true on, by full truth-table scan.
inline std::set<Minterm> term_truth_set(const Term& t, unsigned n) {
  std::set<Minterm> out;
  for (Minterm m = 0; m < (Minterm{1} << n); ++m)
    if (term_matches(t, m)) out.insert(m);
  return out;
}

// Minterms an SOP evaluates true on.
inline std::set<Minterm> sop_truth_set(const std::vector<Term>& terms, unsigned n) {
  std::set<Minterm> out;
  for (const Term& t : terms) {
    const std::set<Minterm> ts = term_truth_set(t, n);
    out.insert(ts.begin(), ts.end());
  }
  return out;
}

// Cube members found by scanning the whole space for fixed-bit agreement.
inline std::vector<Minterm> members_by_scan(Cube c, unsigned n) {
  std::vector<Minterm> out;
  for (Minterm m = 0; m < (Minterm{1} << n); ++m)
    if ((m & ~c.esum) == c.least) out.push_back(m);
  return out;
}

// Arithmetic least-plus-subset-sum expansion via explicit bit positions; no
// cube validation, so it also expands non-canonical (least, esum) pairs.
inline std::vector<Minterm> raw_members(Minterm least, Mask esum) {
  std::vector<unsigned> bits;
  for (unsigned p = 0; p < 32; ++p)
    if (esum & (Mask{1} << p)) bits.push_back(p);
  std::vector<Minterm> out;
  for (std::uint32_t k = 0; k < (1u << bits.size()); ++k) {
    Minterm v = least;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (k & (1u << i)) v += Mask{1} << bits[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool covers_all_cares(const std::vector<Cube>& cubes, const BooleanFunction& f) {
  for (Minterm m : f.minterms) {
    bool hit = false;
    for (Cube c : cubes) hit = hit || (m & ~c.esum) == c.least;
    if (!hit) return false;
  }
  return true;
}

inline bool irredundant_cover(const std::vector<Cube>& cubes, const BooleanFunction& f) {
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    std::vector<Cube> rest = cubes;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (covers_all_cares(rest, f)) return false;
  }
  return true;
}

// Best achievable (cube count, literal count) over the given prime
// implicants, by exhaustive subset search in increasing size.
inline std::pair<std::size_t, unsigned> exhaustive_min_cover(const std::vector<Cube>& pis,
                                                             const BooleanFunction& f) {
  for (std::size_t k = 0; k <= pis.size(); ++k) {
    unsigned best = ~0u;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      std::vector<Cube> chosen;
      chosen.reserve(k);
      for (std::size_t i : idx) chosen.push_back(pis[i]);
      if (covers_all_cares(chosen, f)) {
        unsigned literals = 0;
        for (Cube c : chosen)
          literals += f.n - static_cast<unsigned>(std::popcount(c.esum));
        best = std::min(best, literals);
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pis.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best != ~0u) return {k, best};
  }
  return {0, 0};  // unreachable when every care minterm is coverable
}

// All valid cubes over n variables, for exhaustive sweeps at small n.
inline std::vector<Cube> all_cubes(unsigned n) {
  std::vector<Cube> out;
  const Minterm space = Minterm{1} << n;
  for (Mask e = 0; e < space; ++e)
    for (Minterm l = 0; l < space; ++l)
      if ((l & e) == 0) out.push_back(Cube{l, e});
  return out;
}

}  // namespace testsupport
