// Prime-implicant chart and cover selection: essential extraction, dominance
// reduction, and Petrick's method for whatever cyclic remainder is left.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "mqm/core.hpp"
#include "mqm/mqm.hpp"
#include "mqm/qm.hpp"

namespace mqm {

struct UncoveredMintermError : Error {
  using Error::Error;
};

// Coverage matrix of prime implicants (rows) against care minterms only
// (columns) — don't-cares helped combining but never constrain the cover.
struct PIChart {
  unsigned n = 0;
  std::vector<Cube> rows;     // sorted by implicant size, then (least, esum)
  std::vector<Minterm> cols;  // ascending care minterms
  std::vector<std::vector<bool>> covers;  // covers[r][c]
};

inline PIChart build_chart(const std::set<Cube>& pis, const BooleanFunction& f) {
  PIChart chart;
  chart.n = f.n;
  chart.rows.assign(pis.begin(), pis.end());
  std::sort(chart.rows.begin(), chart.rows.end(), [](Cube a, Cube b) {
    return std::tuple(std::popcount(a.esum), a.least, a.esum) <
           std::tuple(std::popcount(b.esum), b.least, b.esum);
  });
  chart.cols.assign(f.minterms.begin(), f.minterms.end());
  chart.covers.assign(chart.rows.size(), std::vector<bool>(chart.cols.size(), false));
  for (std::size_t r = 0; r < chart.rows.size(); ++r)
    for (std::size_t c = 0; c < chart.cols.size(); ++c)
      chart.covers[r][c] = cube_covers(chart.rows[r], chart.cols[c]);
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    bool covered = false;
    for (std::size_t r = 0; r < chart.rows.size() && !covered; ++r)
      covered = chart.covers[r][c];
    if (!covered)
      throw UncoveredMintermError("minterm " + std::to_string(chart.cols[c]) +
                                  " is covered by no prime implicant");
  }
  return chart;
}

namespace detail {

// Petrick's method: expand the product-of-sums covering condition into
// inclusion-minimal row sets.  Absorption after every column keeps the
// product list small at the sizes this library targets.
inline std::vector<std::vector<std::size_t>> petrick_products(
    const std::vector<std::vector<std::size_t>>& column_coverers) {
  std::vector<std::vector<std::size_t>> products{{}};
  auto is_subset = [](const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& coverers : column_coverers) {
    std::vector<std::vector<std::size_t>> grown;
    for (const auto& p : products) {
      for (std::size_t r : coverers) {
        std::vector<std::size_t> q = p;
        const auto at = std::lower_bound(q.begin(), q.end(), r);
        if (at == q.end() || *at != r) q.insert(at, r);
        bool absorbed = false;
        for (std::size_t i = 0; i < grown.size();) {
          if (is_subset(grown[i], q)) {
            absorbed = true;
            break;
          }
          if (is_subset(q, grown[i]))
            grown.erase(grown.begin() + static_cast<std::ptrdiff_t>(i));
          else
            ++i;
        }
        if (!absorbed) grown.push_back(std::move(q));
      }
    }
    products = std::move(grown);
  }
  return products;
}

}  // namespace detail

// Minimum-cost irredundant cover.  Essential rows are taken first; dominance
// prunes the chart (a row may be dropped for a superset-coverage row only
// when that row is no more expensive, so the cost order is preserved); the
// rest goes through Petrick's method.  Cost order: fewest cubes, then fewest
// total literals, then lexicographically smallest (least, esum) sequence.
// The returned cubes keep chart-row order.
inline std::vector<Cube> select_cover(const PIChart& chart) {
  const std::size_t R = chart.rows.size();
  const std::size_t C = chart.cols.size();
  std::vector<bool> row_alive(R, true), col_alive(C, true), selected(R, false);
  auto literal_cost = [&](std::size_t r) {
    return chart.n - static_cast<unsigned>(std::popcount(chart.rows[r].esum));
  };
  auto take_row = [&](std::size_t r) {
    selected[r] = true;
    row_alive[r] = false;
    for (std::size_t c = 0; c < C; ++c)
      if (col_alive[c] && chart.covers[r][c]) col_alive[c] = false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // essential rows: sole coverer of some live column
    for (std::size_t c = 0; c < C; ++c) {
      if (!col_alive[c]) continue;
      std::size_t count = 0, last = 0;
      for (std::size_t r = 0; r < R; ++r)
        if (row_alive[r] && chart.covers[r][c]) {
          ++count;
          last = r;
        }
      if (count == 1) {
        take_row(last);
        changed = true;
      }
    }
    // row dominance: drop r1 when r2 covers a superset at no greater cost
    for (std::size_t r1 = 0; r1 < R; ++r1) {
      if (!row_alive[r1]) continue;
      for (std::size_t r2 = 0; r2 < R; ++r2) {
        if (r1 == r2 || !row_alive[r2]) continue;
        bool subset = true, equal = true;
        for (std::size_t c = 0; c < C && subset; ++c) {
          if (!col_alive[c]) continue;
          if (chart.covers[r1][c] && !chart.covers[r2][c]) subset = false;
          if (chart.covers[r1][c] != chart.covers[r2][c]) equal = false;
        }
        if (!subset) continue;
        const unsigned c1 = literal_cost(r1), c2 = literal_cost(r2);
        if (c2 < c1 || (c2 == c1 && (!equal || chart.rows[r2] < chart.rows[r1]))) {
          row_alive[r1] = false;
          changed = true;
          break;
        }
      }
    }
    // column dominance: a column implied by another adds no constraint
    for (std::size_t c1 = 0; c1 < C; ++c1) {
      if (!col_alive[c1]) continue;
      for (std::size_t c2 = 0; c2 < C; ++c2) {
        if (c1 == c2 || !col_alive[c2]) continue;
        bool subset = true, equal = true;  // coverers(c1) vs coverers(c2)
        for (std::size_t r = 0; r < R && subset; ++r) {
          if (!row_alive[r]) continue;
          if (chart.covers[r][c1] && !chart.covers[r][c2]) subset = false;
          if (chart.covers[r][c1] != chart.covers[r][c2]) equal = false;
        }
        if (subset && (!equal || c1 < c2)) {
          col_alive[c2] = false;
          changed = true;
        }
      }
    }
  }

  // cyclic remainder
  std::vector<std::vector<std::size_t>> remaining;
  for (std::size_t c = 0; c < C; ++c) {
    if (!col_alive[c]) continue;
    std::vector<std::size_t> coverers;
    for (std::size_t r = 0; r < R; ++r)
      if (row_alive[r] && chart.covers[r][c]) coverers.push_back(r);
    remaining.push_back(std::move(coverers));
  }
  if (!remaining.empty()) {
    const auto products = detail::petrick_products(remaining);
    auto score = [&](const std::vector<std::size_t>& p) {
      std::vector<Cube> cubes;
      for (std::size_t r = 0; r < R; ++r)
        if (selected[r]) cubes.push_back(chart.rows[r]);
      for (std::size_t r : p) cubes.push_back(chart.rows[r]);
      unsigned literals = 0;
      for (const Cube& cb : cubes)
        literals += chart.n - static_cast<unsigned>(std::popcount(cb.esum));
      std::sort(cubes.begin(), cubes.end());
      const std::size_t count = cubes.size();
      return std::tuple(count, literals, std::move(cubes));
    };
    const std::vector<std::size_t>* best = nullptr;
    auto best_score = score(products.front());
    for (const auto& p : products) {
      auto s = score(p);
      if (!best || s < best_score) {
        best = &p;
        best_score = std::move(s);
      }
    }
    for (std::size_t r : *best) selected[r] = true;
  }

  std::vector<Cube> cover;
  for (std::size_t r = 0; r < R; ++r)
    if (selected[r]) cover.push_back(chart.rows[r]);
  return cover;
}

enum class Method { qm, mqm };

struct MinimizeResult {
  unsigned n = 0;
  Method method = Method::mqm;
  std::set<Cube> prime_implicants;
  std::vector<Cube> cover;  // chart-row order: larger implicants last
  std::vector<Term> terms;  // cover, rendered
  ComparisonCounter comparisons;
};

inline unsigned total_literals(const MinimizeResult& r) {
  unsigned k = 0;
  for (const Term& t : r.terms) k += term_literal_count(t);
  return k;
}

// End to end: generate prime implicants with the chosen method, build the
// chart, pick the cover, convert to terms.  The constant-0 function has no
// SOP in this grammar and is rejected.
inline MinimizeResult minimize(const BooleanFunction& f, Method method = Method::mqm) {
  if (f.minterms.empty())
    throw EmptyFunctionError("function has no care minterms");
  MinimizeResult result;
  result.n = f.n;
  result.method = method;
  result.prime_implicants = method == Method::qm
                                ? qm_prime_implicants(f, result.comparisons)
                                : mqm_prime_implicants(f, result.comparisons);
  const PIChart chart = build_chart(result.prime_implicants, f);
  result.cover = select_cover(chart);
  for (Cube c : result.cover) result.terms.push_back(cube_to_term(c, f.n));
  return result;
}

}  // namespace mqm
