#include <catch2/catch_amalgamated.hpp>

#include "mqm/cover.hpp"
#include "mqm/metrics.hpp"
#include "mqm/random.hpp"
#include "support.hpp"

using namespace mqm;
using namespace testsupport;

TEST_CASE("the chart pairs prime implicants with care minterms only") {
    ComparisonCounter counter;
    const BooleanFunction f = reference_function();
    const std::set<Cube> pis = mqm_prime_implicants(f, counter);
    const PIChart chart = build_chart(pis, f);

    // rows ascend by implicant size, then (least, esum); columns are cares
    CHECK(chart.rows == std::vector<Cube>{{0, 4}, {0, 8}, {8, 1}, {8, 2}, {9, 4},
                                          {4, 3}, {5, 10}});
    CHECK(chart.cols == std::vector<Minterm>{4, 5, 6, 8, 9, 10, 13});

    auto row_covers = [&](Cube c) {
        std::vector<Minterm> out;
        const std::size_t r = static_cast<std::size_t>(
            std::find(chart.rows.begin(), chart.rows.end(), c) - chart.rows.begin());
        for (std::size_t i = 0; i < chart.cols.size(); ++i)
            if (chart.covers[r][i]) out.push_back(chart.cols[i]);
        return out;
    };
    CHECK(row_covers(Cube{0, 4}) == std::vector<Minterm>{4});
    CHECK(row_covers(Cube{8, 2}) == std::vector<Minterm>{8, 10});
    CHECK(row_covers(Cube{9, 4}) == std::vector<Minterm>{9, 13});
    CHECK(row_covers(Cube{4, 3}) == std::vector<Minterm>{4, 5, 6});
    CHECK(row_covers(Cube{5, 10}) == std::vector<Minterm>{5, 13});
}

TEST_CASE("a minterm no implicant covers is an error") {
    const BooleanFunction f(2, {0, 3});
    CHECK_THROWS_MATCHES(build_chart({Cube{0, 0}}, f), UncoveredMintermError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("minterm 3")));
}

TEST_CASE("cover selection on the reference function") {
    ComparisonCounter counter;
    const BooleanFunction f = reference_function();
    const PIChart chart = build_chart(mqm_prime_implicants(f, counter), f);
    CHECK(select_cover(chart) == std::vector<Cube>{{8, 2}, {9, 4}, {4, 3}});
}

TEST_CASE("essential implicants force the two-cube cover of m(0,1,2)") {
    const BooleanFunction f(2, {0, 1, 2});
    ComparisonCounter counter;
    const PIChart chart = build_chart(mqm_prime_implicants(f, counter), f);
    CHECK(select_cover(chart) == std::vector<Cube>{{0, 1}, {0, 2}});
}

TEST_CASE("a cyclic chart falls through to exact product expansion") {
    // six prime implicants in a cycle, no essentials; two three-cube covers
    // exist and the tie breaks toward the smaller cube sequence
    const BooleanFunction f(3, {0, 1, 2, 5, 6, 7});
    ComparisonCounter counter;
    const PIChart chart = build_chart(mqm_prime_implicants(f, counter), f);
    CHECK(chart.rows.size() == 6);
    const std::vector<Cube> cover = select_cover(chart);
    CHECK(cover == std::vector<Cube>{{0, 1}, {2, 4}, {5, 2}});
}

TEST_CASE("row dominance prefers the cheaper implicant") {
    // three implicants cover the sole care minterm; the two-literal one wins
    const BooleanFunction f(4, {5}, {1, 4, 7, 13, 15});
    const MinimizeResult r = minimize(f);
    REQUIRE(r.cover.size() == 1);
    CHECK(r.cover == std::vector<Cube>{{5, 10}});
    CHECK(term_to_text(r.terms[0], "ABCD") == "BD");
}

TEST_CASE("equal-cost equal-coverage rows break ties toward the smaller cube") {
    const BooleanFunction f(4, {5}, {1, 4});
    const MinimizeResult r = minimize(f);
    CHECK(r.prime_implicants == std::set<Cube>{Cube{1, 4}, Cube{4, 1}});
    CHECK(r.cover == std::vector<Cube>{{1, 4}});
}

TEST_CASE("end-to-end minimization of the reference function") {
    const MinimizeResult r = minimize(reference_function());
    CHECK(r.n == 4);
    CHECK(r.method == Method::mqm);
    CHECK(r.prime_implicants.size() == 7);
    CHECK(r.cover == std::vector<Cube>{{8, 2}, {9, 4}, {4, 3}});
    REQUIRE(r.terms.size() == 3);
    CHECK(term_to_text(r.terms[0], "ABCD") == "AB'D'");
    CHECK(term_to_text(r.terms[1], "ABCD") == "AC'D");
    CHECK(term_to_text(r.terms[2], "ABCD") == "A'B");
    CHECK(total_literals(r) == 8);
    CHECK(r.comparisons.total() == 35);
}

TEST_CASE("both generators minimize to the same expression") {
    const MinimizeResult a = minimize(reference_function(), Method::qm);
    const MinimizeResult b = minimize(reference_function(), Method::mqm);
    CHECK(a.method == Method::qm);
    CHECK(a.prime_implicants == b.prime_implicants);
    CHECK(a.cover == b.cover);
    CHECK(a.terms == b.terms);
    CHECK(a.comparisons.per_pass.front() == 20);
    CHECK(a.comparisons.total() > b.comparisons.total());
}

TEST_CASE("a function that is 1 everywhere minimizes to the constant term") {
    const MinimizeResult r = minimize(all_minterms_function(4));
    CHECK(r.cover == std::vector<Cube>{{0, 15}});
    CHECK(term_to_text(r.terms[0], "ABCD") == "1");
    CHECK(total_literals(r) == 0);
}

TEST_CASE("functions without care minterms cannot be minimized") {
    CHECK_THROWS_AS(minimize(BooleanFunction(3, {}, {})), EmptyFunctionError);
    CHECK_THROWS_AS(minimize(BooleanFunction(3, {}, {1, 2})), EmptyFunctionError);
}

TEST_CASE("selected covers are valid, irredundant, and minimum on random functions") {
    Lcg rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + trial % 4;
        const BooleanFunction f = random_function(n, rng);
        if (f.minterms.empty()) continue;
        const MinimizeResult r = minimize(f);

        CHECK(covers_all_cares(r.cover, f));
        CHECK(irredundant_cover(r.cover, f));
        // the rendered SOP is 1 on every care and 0 outside care and don't-care
        for (Minterm m = 0; m < (Minterm{1} << n); ++m) {
            bool value = false;
            for (const Term& t : r.terms) value = value || term_matches(t, m);
            if (f.minterms.count(m)) CHECK(value);
            if (!f.minterms.count(m) && !f.dont_cares.count(m)) CHECK_FALSE(value);
        }

        const std::vector<Cube> pis(r.prime_implicants.begin(), r.prime_implicants.end());
        const auto [best_count, best_literals] = exhaustive_min_cover(pis, f);
        CHECK(r.cover.size() == best_count);
        CHECK(total_literals(r) == best_literals);
    }
}
