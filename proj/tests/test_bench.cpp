#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "vsglb/bench.hpp"
#include "vsglb/random.hpp"

using namespace vsglb;

TEST_CASE("zero trials yield an empty stream") {
    CHECK(generate(GenSpec{4, 2, 3, 1, 0}).empty());
}

TEST_CASE("generated entries lie in [0, 1)") {
    auto instances = generate(GenSpec{5, 2, 4, 9, 10});
    REQUIRE(instances.size() == 10);
    for (const auto& inst : instances)
        for (std::size_t i = 0; i < inst.n(); ++i)
            for (std::size_t k = 0; k < inst.d(); ++k) {
                CHECK(inst.cost(i, 0, k) >= 0.0);
                CHECK(inst.cost(i, 0, k) < 1.0);
            }
}

TEST_CASE("identical specs produce bit-identical streams") {
    GenSpec spec{2, 2, 2, 42, 5};
    auto a = generate(spec);
    auto b = generate(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 0; k < 2; ++k) CHECK(a[t].cost(i, 0, k) == b[t].cost(i, 0, k));
}

TEST_CASE("different seeds diverge") {
    auto a = generate(GenSpec{2, 2, 2, 1, 1});
    auto b = generate(GenSpec{2, 2, 2, 2, 1});
    bool any_diff = false;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) any_diff |= a[0].cost(i, 0, k) != b[0].cost(i, 0, k);
    CHECK(any_diff);
}

TEST_CASE("box stats use interpolated quartiles") {
    auto stats = box_stats({4.0, 2.0, 1.0, 3.0});
    CHECK(stats.min == 1.0);
    CHECK(stats.q1 == doctest::Approx(1.75));
    CHECK(stats.median == doctest::Approx(2.5));
    CHECK(stats.q3 == doctest::Approx(3.25));
    CHECK(stats.max == 4.0);
    CHECK_THROWS_AS(box_stats({}), std::invalid_argument);
}

TEST_CASE("ratio scenario records are complete and reproducible") {
    auto records = scenario_ratio(7, 3);
    REQUIRE(records.size() == 9);  // trials x algorithms
    for (const auto& r : records) {
        CHECK(r.scenario == "ratio");
        CHECK(r.d == 20);
        REQUIRE(r.opt.has_value());
        REQUIRE(r.ratio.has_value());
        CHECK(*r.ratio >= 1.0 - 1e-9);
        CHECK(*r.ratio == doctest::Approx(r.makespan / *r.opt).epsilon(1e-12));
    }
    CHECK(check_ratio_records(records).empty());

    auto again = scenario_ratio(7, 3);
    CHECK(ratio_csv(records) == ratio_csv(again));
}

TEST_CASE("ratio CSV shape") {
    auto records = scenario_ratio(3, 2);
    const std::string csv = ratio_csv(records);
    std::istringstream lines(csv);
    std::string line;
    std::size_t count = 0;
    std::getline(lines, line);
    CHECK(line == "trial,algo,makespan,opt,ratio");
    while (std::getline(lines, line)) ++count;
    CHECK(count == 6);
}

TEST_CASE("makespan scenario summarizes every dimension and algorithm") {
    auto means = scenario_makespan(7, 2);
    REQUIRE(means.size() == 21);  // 7 dimensions x 3 algorithms
    for (const auto& r : means) {
        CHECK(r.trials == 2);
        CHECK(r.mean_makespan > 0.0);
    }
    const std::string csv = makespan_csv(means);
    CHECK(csv.rfind("d,algo,mean_makespan,trials\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);

    auto again = scenario_makespan(7, 2);
    CHECK(makespan_csv(again) == csv);
}

TEST_CASE("violated ratio bounds are reported") {
    std::vector<TrialRecord> records = {
        TrialRecord{"ratio", 0, 20, kAlgoList, 30.0, 1.0, 30.0},
        TrialRecord{"ratio", 1, 20, kAlgoGreedyFast, 0.5, 1.0, 0.5},
    };
    auto violations = check_ratio_records(records);
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].find("exceeds bound") != std::string::npos);
    CHECK(violations[1].find("below 1") != std::string::npos);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(generate(GenSpec{0, 1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate(GenSpec{1, 0, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate(GenSpec{1, 1, 0, 1, 1}), std::invalid_argument);
}
