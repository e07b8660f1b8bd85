// E-sum based Quine-McCluskey variant.  Instead of testing every adjacent
// pair, each cube probes upward for least + 2^p; only probes that land on an
// existing cube cost a comparison, and two cubes combine exactly when their
// E-sums agree and their least minterms differ by a power of two.
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "mqm/core.hpp"
#include "mqm/qm.hpp"

namespace mqm {

inline GroupTable group_minterms(const BooleanFunction& f) {
  return detail::build_group_table(f);
}

// The matching rule.  Returns the mismatch positional weight — the weight of
// the variable the combination would eliminate — or nothing.  Group
// adjacency is not checked here; callers pair adjacent groups.
inline std::optional<Mask> mqm_match(Cube a, Cube b) {
  if (a.esum != b.esum) return std::nullopt;
  if (b.least <= a.least) return std::nullopt;
  const Minterm diff = b.least - a.least;
  if (!std::has_single_bit(diff)) return std::nullopt;
  return Mask{diff};
}

// pre: mqm_match(a, b) returned mpw.  The matched weight is never inside the
// shared esum (both least minterms are 0 there), so the addition is disjoint.
inline Cube combine(Cube a, Cube b, Mask mpw) {
  assert(a.esum == b.esum && b.least - a.least == mpw);
  (void)b;
  return Cube{a.least, a.esum + mpw};
}

// Drop repeated (least, esum) pairs, keeping first occurrences.  Equal least
// and esum force an equal largest minterm (least + esum), so the two-field
// key decides identity.
inline std::vector<Cube> dedup(const std::vector<Cube>& cubes) {
  std::vector<Cube> out;
  std::set<Cube> seen;
  for (Cube c : cubes)
    if (seen.insert(c).second) out.push_back(c);
  return out;
}

// One combining sweep.  Probes run p = 0..n-1 ascending; a probe that finds
// no cube with the target least minterm costs nothing, while a hit tests (and
// counts) every cube sharing that least minterm.  Matches are emitted into
// the output bucket g — the combined cube keeps the lower least minterm — and
// both participants are checkmarked in the input table.
inline GroupTable mqm_pass(GroupTable& table, ComparisonCounter& counter) {
  counter.start_pass();
  const unsigned n = table.n;
  GroupTable next;
  next.n = n;
  next.groups.resize(n + 1);
  for (unsigned g = 0; g < n; ++g) {
    auto& lower = table.groups[g];
    auto& upper = table.groups[g + 1];
    if (lower.empty() || upper.empty()) continue;
    std::unordered_map<Minterm, std::vector<std::size_t>> by_least;
    by_least.reserve(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i)
      by_least[upper[i].cube.least].push_back(i);
    std::vector<Cube> emitted;
    for (GroupEntry& a : lower) {
      for (unsigned p = 0; p < n; ++p) {
        const Minterm target = a.cube.least + (Minterm{1} << p);
        const auto hit = by_least.find(target);
        if (hit == by_least.end()) continue;
        for (std::size_t bi : hit->second) {
          GroupEntry& b = upper[bi];
          counter.add();
          if (const auto mpw = mqm_match(a.cube, b.cube)) {
            emitted.push_back(combine(a.cube, b.cube, *mpw));
            a.checked = b.checked = true;
          }
        }
      }
    }
    for (Cube c : dedup(emitted)) next.groups[g].push_back({c, false});
  }
  return next;
}

// Repeat passes until one emits nothing; prime implicants are the cubes that
// never took part in a combine, collected from every pass's input table.
inline std::set<Cube> mqm_prime_implicants(const BooleanFunction& f,
                                           ComparisonCounter& counter) {
  GroupTable table = group_minterms(f);
  std::set<Cube> pis;
  while (true) {
    GroupTable next = mqm_pass(table, counter);
    detail::collect_unchecked(table, pis);
    if (next.empty()) break;
    table = std::move(next);
  }
  return pis;
}

}  // namespace mqm
