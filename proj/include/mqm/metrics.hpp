// Worst-case comparison-cost formulas, a brute-force prime-implicant oracle
// that is structurally independent of the combining passes, and a benchmark
// that checks measured pass-1 counts against the closed forms.
#pragma once

#include <bit>
#include <cstdint>

#include "mqm/core.hpp"
#include "mqm/mqm.hpp"
#include "mqm/qm.hpp"

namespace mqm {

// Exact C(n, k); the stepwise product stays integral and fits easily for the
// n this library accepts.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {
inline void check_formula_range(unsigned n) {
  if (n < 1 || n > kMaxVariables)
    throw RangeError("variable count must be between 1 and " +
                     std::to_string(kMaxVariables) + ", got " + std::to_string(n));
}
}  // namespace detail

// Adjacent-group pairings over the full 2^n minterm set:
// sum over i of C(n,i) * C(n,i+1).
inline std::uint64_t worst_case_qm_comparisons(unsigned n) {
  detail::check_formula_range(n);
  std::uint64_t total = 0;
  for (unsigned i = 0; i < n; ++i) total += binomial(n, i) * binomial(n, i + 1);
  return total;
}

// Probe hits over the full set: sum over i of C(n,i) * (n-i), which
// telescopes to n * 2^(n-1).  Both forms are computed and cross-checked.
inline std::uint64_t worst_case_mqm_comparisons(unsigned n) {
  detail::check_formula_range(n);
  std::uint64_t summation = 0;
  for (unsigned i = 0; i < n; ++i) summation += binomial(n, i) * (n - i);
  const std::uint64_t closed = std::uint64_t{n} << (n - 1);
  if (summation != closed)
    throw Error("probe-count summation diverged from its closed form");
  return closed;
}

// Reference prime-implicant generator: enumerate all 3^n cubes, keep the
// feasible ones (every member care or don't-care), then drop any cube whose
// single-variable extension is also feasible.  No grouping, no passes.
inline std::set<Cube> brute_force_prime_implicants(const BooleanFunction& f) {
  if (f.n > 12)
    throw RangeError("brute-force generator is capped at 12 variables, got " +
                     std::to_string(f.n));
  const unsigned n = f.n;
  const Minterm space = Minterm{1} << n;
  std::vector<bool> allowed(space, false);
  for (Minterm m : f.minterms) allowed[m] = true;
  for (Minterm m : f.dont_cares) allowed[m] = true;

  // feasible[(esum << n) | least]
  std::vector<bool> feasible(std::size_t{1} << (2 * n), false);
  for (Mask e = 0; e < space; ++e) {
    const Mask rest = static_cast<Mask>(~e) & (space - 1);
    Minterm least = 0;
    while (true) {  // all least with least & e == 0
      bool ok = true;
      Mask s = 0;
      do {
        if (!allowed[least + s]) {
          ok = false;
          break;
        }
        s = (s - e) & e;
      } while (s != 0);
      if (ok) feasible[(std::size_t{e} << n) | least] = true;
      least = (least - rest) & rest;
      if (least == 0) break;
    }
  }

  std::set<Cube> pis;
  for (Mask e = 0; e < space; ++e) {
    const Mask rest = static_cast<Mask>(~e) & (space - 1);
    Minterm least = 0;
    while (true) {
      if (feasible[(std::size_t{e} << n) | least]) {
        bool extendable = false;
        for (unsigned p = 0; p < n && !extendable; ++p) {
          const Mask w = Mask{1} << p;
          if (e & w) continue;
          // growing the cube along p needs the sibling cube to be feasible
          extendable = feasible[(std::size_t{e} << n) | (least ^ w)];
        }
        if (!extendable) pis.insert(Cube{least, e});
      }
      least = (least - rest) & rest;
      if (least == 0) break;
    }
  }
  return pis;
}

inline BooleanFunction all_minterms_function(unsigned n) {
  detail::check_formula_range(n);
  std::set<Minterm> all;
  for (Minterm m = 0; m < (Minterm{1} << n); ++m) all.insert(all.end(), m);
  return BooleanFunction(n, std::move(all));
}

struct BenchRow {
  unsigned n = 0;
  std::uint64_t qm_formula = 0;
  std::uint64_t mqm_formula = 0;
  std::uint64_t qm_measured = 0;   // pass-1 comparisons on the all-minterms function
  std::uint64_t mqm_measured = 0;
  double ratio = 0.0;              // qm_formula / mqm_formula
};

// Run both generators on the all-minterms function for each n and put the
// measured first-pass counts next to the formulas.  Measured and formula
// values are expected to be identical; the caller decides how loudly to
// complain if they are not.
inline std::vector<BenchRow> bench_worst_case(unsigned n_min, unsigned n_max) {
  if (n_min < 1 || n_max > 12 || n_min > n_max)
    throw RangeError("bench range must satisfy 1 <= n_min <= n_max <= 12");
  std::vector<BenchRow> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const BooleanFunction f = all_minterms_function(n);
    ComparisonCounter qm_counter, mqm_counter;
    qm_prime_implicants(f, qm_counter);
    mqm_prime_implicants(f, mqm_counter);
    BenchRow row;
    row.n = n;
    row.qm_formula = worst_case_qm_comparisons(n);
    row.mqm_formula = worst_case_mqm_comparisons(n);
    row.qm_measured = qm_counter.per_pass.front();
    row.mqm_measured = mqm_counter.per_pass.front();
    row.ratio = static_cast<double>(row.qm_formula) / static_cast<double>(row.mqm_formula);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mqm
