// Classic Quine-McCluskey prime-implicant generation, instrumented with a
// comparison counter.  Every pairing of a cube in group g with a cube in
// group g+1 costs one comparison, combinable or not — the baseline the
// probing variant is measured against.
#pragma once

#include <bit>
#include <cstdint>
#include <numeric>

#include "mqm/core.hpp"

namespace mqm {

// Candidate-pair comparisons, one bucket per combining pass.
struct ComparisonCounter {
  std::vector<std::uint64_t> per_pass;

  void start_pass() { per_pass.push_back(0); }
  void add(std::uint64_t k = 1) { per_pass.back() += k; }
  std::uint64_t total() const {
    return std::accumulate(per_pass.begin(), per_pass.end(), std::uint64_t{0});
  }
};

namespace detail {

// Care and don't-care minterms enter as unit cubes, bucketed by popcount.
inline GroupTable build_group_table(const BooleanFunction& f) {
  if (f.minterms.empty() && f.dont_cares.empty())
    throw EmptyFunctionError("function has no minterms to group");
  GroupTable table;
  table.n = f.n;
  table.groups.resize(f.n + 1);
  std::set<Minterm> all = f.minterms;
  all.insert(f.dont_cares.begin(), f.dont_cares.end());
  for (Minterm m : all)
    table.groups[static_cast<unsigned>(std::popcount(m))].push_back({Cube{m, 0}, false});
  return table;
}

inline void dedup_entries(std::vector<GroupEntry>& grp) {
  std::vector<GroupEntry> out;
  std::set<Cube> seen;
  for (const GroupEntry& e : grp)
    if (seen.insert(e.cube).second) out.push_back(e);
  grp.swap(out);
}

inline void collect_unchecked(const GroupTable& table, std::set<Cube>& pis) {
  for (const auto& grp : table.groups)
    for (const GroupEntry& e : grp)
      if (!e.checked) pis.insert(e.cube);
}

}  // namespace detail

// Two cubes combine when their eliminated-position masks agree and their
// fixed parts differ in exactly one bit; adjacent grouping puts the extra
// 1-bit on the higher cube, so the result keeps the lower least minterm.
inline std::set<Cube> qm_prime_implicants(const BooleanFunction& f,
                                          ComparisonCounter& counter) {
  GroupTable table = detail::build_group_table(f);
  std::set<Cube> pis;
  while (true) {
    counter.start_pass();
    GroupTable next;
    next.n = table.n;
    next.groups.resize(table.n + 1);
    for (unsigned g = 0; g < table.n; ++g) {
      for (GroupEntry& a : table.groups[g]) {
        for (GroupEntry& b : table.groups[g + 1]) {
          counter.add();
          const Mask diff = a.cube.least ^ b.cube.least;
          if (a.cube.esum == b.cube.esum && std::popcount(diff) == 1) {
            a.checked = b.checked = true;
            next.groups[g].push_back({Cube{a.cube.least, a.cube.esum | diff}, false});
          }
        }
      }
    }
    for (auto& grp : next.groups) detail::dedup_entries(grp);
    detail::collect_unchecked(table, pis);
    if (next.empty()) break;
    table = std::move(next);
  }
  return pis;
}

}  // namespace mqm
