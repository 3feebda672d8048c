#include <doctest.h>

#include <sstream>

#include "partition_kit/bench.hpp"

using namespace pkit;

TEST_CASE("paper suite agrees across methods") {
    auto rows = run_suite(make_suite("paper"));
    REQUIRE(rows.size() == 15);
    for (size_t i = 0; i < rows.size(); i += 3) {
        CHECK(rows[i].count == rows[i + 1].count);
        CHECK(rows[i].count == rows[i + 2].count);
    }
    CHECK(rows[0].count == 34);
    CHECK(rows[3].count == 12);
    CHECK(rows[9].count == 1);
}

TEST_CASE("re-running a suite never changes a count") {
    auto first = run_suite(make_suite("paper"));
    auto second = run_suite(make_suite("paper"));
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) CHECK(first[i].count == second[i].count);
}

TEST_CASE("enumeration over budget is skipped, not run") {
    std::vector<BenchCase> cases = {
        {BenchMethod::Recurrence, 100, 5, 1, 1},
        {BenchMethod::Enumeration, 100, 5, 1, 1},
    };
    EnumerationBudget budget;  // max_weight 60
    auto rows = run_suite(cases, budget);
    REQUIRE(rows.size() == 2);
    CHECK(!rows[0].skipped);
    CHECK(rows[1].skipped);

    std::ostringstream os;
    write_csv(os, rows);
    auto csv = os.str();
    CHECK(csv.starts_with("method,n,k,d,r,nanos,count\n"));
    CHECK(csv.find("enumeration,100,5,1,1,skipped,") != std::string::npos);
}

TEST_CASE("unknown or empty suite is rejected") {
    CHECK_THROWS_AS(make_suite(""), std::invalid_argument);
    CHECK_THROWS_AS(make_suite("nope"), std::invalid_argument);
}

TEST_CASE("repetitions must be positive") {
    std::vector<BenchCase> cases = {{BenchMethod::Recurrence, 5, 2, 0, 1, 0, 0}};
    CHECK_THROWS_AS(run_suite(cases), std::invalid_argument);
}
