// Command-line front end: minimize, expand, bench, compare.  Exit codes are
// fixed for scripting: 0 ok, 1 input error, 2 empty function, 3 verification
// failure.  Identical inputs and flags produce byte-identical output.
#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mqm/core.hpp"
#include "mqm/cover.hpp"
#include "mqm/metrics.hpp"
#include "mqm/parse.hpp"
#include "mqm/random.hpp"

namespace mqm {

namespace detail {

inline int error_exit_code(const std::exception& e) {
  return dynamic_cast<const EmptyFunctionError*>(&e) ? 2 : 1;
}

inline std::string format_ratio(double r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << r;
  return os.str();
}

inline void print_minimize_result(const MinimizeResult& r, const std::string& alphabet,
                                  bool as_json, std::ostream& out) {
  std::vector<std::string> term_texts;
  term_texts.reserve(r.terms.size());
  for (const Term& t : r.terms) term_texts.push_back(term_to_text(t, alphabet));
  std::string expression;
  for (std::size_t i = 0; i < term_texts.size(); ++i) {
    if (i) expression += " + ";
    expression += term_texts[i];
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["expression"] = expression;
    j["terms"] = term_texts;
    auto pis = nlohmann::ordered_json::array();
    for (Cube c : r.prime_implicants) {
      nlohmann::ordered_json jc;
      jc["least"] = c.least;
      jc["esum"] = c.esum;
      jc["minterms"] = cube_members(c, r.n);
      pis.push_back(std::move(jc));
    }
    j["prime_implicants"] = std::move(pis);
    nlohmann::ordered_json comparisons;
    comparisons["per_pass"] = r.comparisons.per_pass;
    comparisons["total"] = r.comparisons.total();
    j["comparisons"] = std::move(comparisons);
    j["method"] = r.method == Method::qm ? "qm" : "mqm";
    j["n"] = r.n;
    out << j.dump() << "\n";
  } else {
    out << expression << "\n";
    out << "prime implicants: " << r.prime_implicants.size() << "\n";
    out << "selected cubes: " << r.cover.size() << "\n";
    out << "literals: " << total_literals(r) << "\n";
    out << "comparisons per pass:";
    for (std::uint64_t v : r.comparisons.per_pass) out << " " << v;
    out << "\n";
    out << "comparisons total: " << r.comparisons.total() << "\n";
  }
}

// vars empty: the text is a list-form spec.  vars given: the text is an SOP
// expression over those variables.
inline void run_minimize_input(const std::string& text, const std::string& vars,
                               Method method, bool as_json, std::ostream& out) {
  const BooleanFunction f =
      vars.empty() ? parse_function_spec(text)
                   : canonicalize(parse_sop_expression(text, vars)).first;
  const MinimizeResult r = minimize(f, method);
  print_minimize_result(r, vars.empty() ? default_alphabet(f.n) : vars, as_json, out);
}

inline void run_expand_input(const std::string& text, const std::string& vars,
                             std::ostream& out) {
  const auto [f, stats] = canonicalize(parse_sop_expression(text, vars));
  out << function_to_text(f) << "\n";
  out << "terms=" << stats.input_term_count << " minterms=" << stats.canonical_minterm_count
      << " added=" << stats.added << "\n";
}

inline int for_each_line(const std::string& path, std::ostream& err,
                         const std::function<void(const std::string&)>& fn) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open file '" << path << "'\n";
    return 1;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(line);
    } catch (const std::exception& e) {
      err << "error: line " << lineno << ": " << e.what() << "\n";
      return error_exit_code(e);
    }
  }
  return 0;
}

inline int run_bench(unsigned n_min, unsigned n_max, std::ostream& out, std::ostream& err) {
  const std::vector<BenchRow> rows = bench_worst_case(n_min, n_max);
  bool mismatch = false;
  for (const BenchRow& r : rows) {
    out << r.n << " " << r.qm_formula << " " << r.mqm_formula << " " << r.qm_measured
        << " " << r.mqm_measured << " " << format_ratio(r.ratio) << "\n";
    mismatch |= r.qm_measured != r.qm_formula || r.mqm_measured != r.mqm_formula;
  }
  if (mismatch) {
    err << "error: measured comparison counts diverge from the formulas\n";
    return 3;
  }
  return 0;
}

// One random function: PI sets must agree across both generators and the
// brute-force reference, and the selected cover must be valid.
inline bool cross_check(const BooleanFunction& f, std::string& why) {
  const std::set<Cube> oracle = brute_force_prime_implicants(f);
  if (f.minterms.empty() && f.dont_cares.empty()) {
    if (!oracle.empty()) {
      why = "reference generator found cubes in an empty function";
      return false;
    }
    return true;  // nothing to group or cover
  }
  ComparisonCounter qm_counter, mqm_counter;
  const std::set<Cube> qm_set = qm_prime_implicants(f, qm_counter);
  const std::set<Cube> mqm_set = mqm_prime_implicants(f, mqm_counter);
  if (qm_set != mqm_set) {
    why = "prime-implicant sets differ between the two methods";
    return false;
  }
  if (qm_set != oracle) {
    why = "prime-implicant sets differ from the reference generator";
    return false;
  }
  if (f.minterms.empty()) return true;  // no cover to select
  const MinimizeResult r = minimize(f, Method::mqm);
  auto covered_by = [&](const std::vector<Cube>& cubes, Minterm m) {
    for (Cube c : cubes)
      if (cube_covers(c, m)) return true;
    return false;
  };
  for (Minterm m : f.minterms)
    if (!covered_by(r.cover, m)) {
      why = "cover misses minterm " + std::to_string(m);
      return false;
    }
  for (std::size_t i = 0; i < r.cover.size(); ++i) {
    std::vector<Cube> without = r.cover;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    bool still = true;
    for (Minterm m : f.minterms) still = still && covered_by(without, m);
    if (still) {
      why = "cover is redundant";
      return false;
    }
  }
  for (Minterm m = 0; m < (Minterm{1} << f.n); ++m) {
    bool value = false;
    for (const Term& t : r.terms) value = value || term_matches(t, m);
    if (f.minterms.count(m) && !value) {
      why = "output is 0 on care minterm " + std::to_string(m);
      return false;
    }
    if (!f.minterms.count(m) && !f.dont_cares.count(m) && value) {
      why = "output is 1 outside care and don't-care at " + std::to_string(m);
      return false;
    }
  }
  return true;
}

inline int run_compare(unsigned n, std::uint64_t trials, std::uint64_t seed,
                       std::ostream& out, std::ostream& err) {
  if (n < 1 || n > 6)
    throw RangeError("compare is capped at 6 variables, got " + std::to_string(n));
  Lcg rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const BooleanFunction f = random_function(n, rng);
    std::string why;
    if (!cross_check(f, why)) {
      err << "error: trial " << t << ": " << why << "\n";
      out << function_to_text(f) << "\n";  // re-runnable via minimize
      return 3;
    }
  }
  out << trials << "/" << trials << " ok\n";
  return 0;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level Boolean function minimizer with instrumented comparison counts"};
  app.require_subcommand(1);

  auto* mini = app.add_subcommand("minimize", "Minimize a function to a minimal SOP");
  std::string mini_spec, mini_expr, mini_vars, mini_file, mini_method = "mqm";
  bool mini_json = false;
  mini->add_option("spec", mini_spec, "List-form spec, e.g. \"n=4 m(4,5) d(0)\"");
  mini->add_option("--expr", mini_expr, "SOP expression input (requires --vars)");
  mini->add_option("--vars", mini_vars, "Ordered variable letters, e.g. ABCD");
  mini->add_option("--file", mini_file, "Read one input per line");
  mini->add_option("--method", mini_method, "Prime-implicant generator (default mqm)")
      ->check(CLI::IsMember({"qm", "mqm"}));
  mini->add_flag("--json", mini_json, "Machine-readable output");

  auto* expand = app.add_subcommand("expand", "Expand an expression to canonical form");
  std::string expand_expr, expand_vars, expand_file;
  expand->add_option("--expr", expand_expr, "SOP expression");
  expand->add_option("--vars", expand_vars, "Ordered variable letters")->required();
  expand->add_option("--file", expand_file, "Read one expression per line");

  auto* bench = app.add_subcommand("bench", "Worst-case comparison counts vs formulas");
  unsigned bench_min = 2, bench_max = 8;
  bench->add_option("--n-min", bench_min, "Smallest variable count (default 2)");
  bench->add_option("--n-max", bench_max, "Largest variable count (default 8)");

  auto* compare = app.add_subcommand("compare", "Cross-check generators on random functions");
  unsigned compare_n = 0;
  std::uint64_t compare_trials = 1000, compare_seed = 0;
  compare->add_option("--n", compare_n, "Variable count (at most 6)")->required();
  compare->add_option("--trials", compare_trials, "Random functions to draw (default 1000)");
  compare->add_option("--seed", compare_seed, "Generator seed (default 0)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(mini)) {
      const Method method = mini_method == "qm" ? Method::qm : Method::mqm;
      const int inputs = !mini_spec.empty() + !mini_expr.empty() + !mini_file.empty();
      if (inputs != 1) {
        err << "error: provide exactly one of a spec argument, --expr, or --file\n";
        return 1;
      }
      if (!mini_expr.empty() && mini_vars.empty()) {
        err << "error: --expr requires --vars\n";
        return 1;
      }
      if (!mini_spec.empty() && !mini_vars.empty()) {
        err << "error: --vars applies to expression input only\n";
        return 1;
      }
      if (!mini_file.empty())
        return detail::for_each_line(mini_file, err, [&](const std::string& line) {
          detail::run_minimize_input(line, mini_vars, method, mini_json, out);
        });
      detail::run_minimize_input(mini_spec.empty() ? mini_expr : mini_spec, mini_vars,
                                 method, mini_json, out);
      return 0;
    }
    if (app.got_subcommand(expand)) {
      const int inputs = !expand_expr.empty() + !expand_file.empty();
      if (inputs != 1) {
        err << "error: provide exactly one of --expr or --file\n";
        return 1;
      }
      if (!expand_file.empty())
        return detail::for_each_line(expand_file, err, [&](const std::string& line) {
          detail::run_expand_input(line, expand_vars, out);
        });
      detail::run_expand_input(expand_expr, expand_vars, out);
      return 0;
    }
    if (app.got_subcommand(bench)) return detail::run_bench(bench_min, bench_max, out, err);
    if (app.got_subcommand(compare))
      return detail::run_compare(compare_n, compare_trials, compare_seed, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return detail::error_exit_code(e);
  }
  return 0;
}

}  // namespace mqm
