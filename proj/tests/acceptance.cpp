// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact equality; the only tolerances are the time
// budgets printed alongside.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "partition_kit/bench.hpp"
#include "partition_kit/bijection.hpp"
#include "partition_kit/counter.hpp"
#include "partition_kit/enumerate.hpp"
#include "partition_kit/identities.hpp"

using namespace pkit;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double elapsed_s) {
    std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), elapsed_s);
    if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int id, const std::string& what, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", id, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, what, ok, secs);
}

bool criterion1(Counter& c) {
    ConstraintSpec spec = ConstraintSpec::exactly(4, 1, 1);
    bool ok = c.count(22, spec, Method::Recurrence) == 34 &&
              c.count(22, spec, Method::Reduction) == 34 &&
              count_by_enumeration(22, spec) == 34;

    auto level3 = iterated_expansion(c, 22, 4, 1, 3);
    std::vector<int64_t> args3;
    for (const auto& t : level3.terms) args3.push_back(t.argument);
    ok = ok && args3 == std::vector<int64_t>{18, 14, 10, 6, 2} && level3.total == 34;

    auto level2 = iterated_expansion(c, 22, 4, 1, 2);
    std::vector<int64_t> printed2;
    for (const auto& t : level2.terms)
        if (t.argument >= 1) printed2.push_back(t.argument);
    ok = ok && level2.positive_arg_terms == 13 && level2.total == 34 &&
         printed2 == std::vector<int64_t>{15, 12, 9, 6, 3, 11, 8, 5, 2, 7, 4, 1, 3};

    auto level1 = iterated_expansion(c, 22, 4, 1, 1);
    ok = ok && level1.terms.size() == 39 && level1.zero_value_terms == 5 &&
         level1.total == 34;
    return ok;
}

bool criterion2(Counter& c) {
    bool ok = c.count(18, ConstraintSpec::exactly(3, 1, 2), Method::Recurrence) == 12 &&
              c.count(18, ConstraintSpec::exactly(3, 1, 2), Method::Reduction) == 12;
    const std::pair<int64_t, int64_t> expected[] = {{13, 5}, {10, 4}, {7, 2}, {4, 1}};
    for (auto [arg, value] : expected)
        ok = ok && c.count(arg, ConstraintSpec::exactly(2, 1, 2)) == value;
    return ok && check_cor6(c, 18, 3, 2).pass();
}

bool criterion3(Counter& c) {
    EnumerationBudget budget;
    for (int64_t n = 0; n <= 40; ++n)
        for (int64_t d = 0; d <= 4; ++d)
            for (int64_t r = 1; r <= 4; ++r) {
                auto any = ConstraintSpec::any(r, d);
                if (c.count(n, any) != count_by_enumeration(n, any, budget)) return false;
                for (int64_t k = 0; k <= 10; ++k) {
                    auto ex = ConstraintSpec::exactly(k, r, d);
                    auto am = ConstraintSpec::at_most(k, r, d);
                    if (c.count(n, ex) != count_by_enumeration(n, ex, budget)) return false;
                    if (c.count(n, am) != count_by_enumeration(n, am, budget)) return false;
                }
            }
    return true;
}

bool criterion4(Counter& c) {
    for (int64_t n = 0; n <= 200; ++n) {
        BigCount acc = 0;
        for (int64_t k = 0; k <= n; ++k) acc += c.p_exact_k(n, k);
        if (acc != c.p_total(n)) return false;
    }
    auto by_sum = Counter::p_total_by_length_sum_upto(2000);
    for (int64_t n = 0; n <= 2000; ++n)
        if (by_sum[n] != c.p_total(n)) return false;
    return true;
}

bool criterion5(Counter& c) {
    const IdentityFamily families[] = {
        IdentityFamily::Prop1AltSum,   IdentityFamily::Prop2Split,
        IdentityFamily::Cor3D1Sum,     IdentityFamily::Prop4Shift,
        IdentityFamily::Prop5Split,    IdentityFamily::Cor6GeneralSum,
        IdentityFamily::ShiftDMinus1,  IdentityFamily::DurfeeRR1,
        IdentityFamily::DurfeeRR2,     IdentityFamily::Rel39Multiple,
        IdentityFamily::TheoremMain,   IdentityFamily::DeltaTable,
    };
    bool ok = true;
    for (auto family : families) {
        auto rep = run_grid(c, family, default_ranges(family));
        if (!rep.pass()) {
            std::fprintf(stderr, "identity grid failed: %s (%zu failures)\n",
                         rep.family.c_str(), rep.failures.size());
            ok = false;
        }
    }
    // The printed first-difference table, straight from the text.
    const int64_t printed[3][4] = {{1, 3, 5, 7}, {1, 4, 7, 10}, {1, 5, 9, 13}};
    for (int64_t k = 3; k <= 5; ++k)
        for (int64_t d = 0; d <= 3; ++d)
            ok = ok && check_delta_table(c, k, d).lhs == printed[k - 3][d];
    return ok;
}

bool criterion6(Counter& c) {
    GridRanges ranges{.n_max = 8, .d_max = 2, .m_max = 3,
                      .formula = GeneralizedFormula::Paper};
    auto paper = run_grid(c, IdentityFamily::GeneralizedM, ranges);
    bool witness = false;
    for (const auto& f : paper.failures)
        if (f.params.at("n") == 2 && f.params.at("m") == 2 && f.params.at("d") == 1 &&
            f.lhs == 2 && f.rhs == 0)
            witness = true;
    ranges.formula = GeneralizedFormula::Corrected;
    auto corrected = run_grid(c, IdentityFamily::GeneralizedM, ranges);
    return !paper.pass() && witness && corrected.pass();
}

bool criterion7() {
    EnumerationBudget budget;
    budget.max_weight = 2000;
    for (int64_t n = 0; n <= 15; ++n)
        for (int64_t d = 0; d <= 3; ++d)
            for (int64_t L : {n, 2 * n}) {
                auto rep = verify_bijectivity(n, L, d, budget);
                if (!rep.pass) {
                    std::fprintf(stderr, "bijection failed at n=%lld L=%lld d=%lld\n",
                                 static_cast<long long>(n), static_cast<long long>(L),
                                 static_cast<long long>(d));
                    return false;
                }
            }
    return true;
}

bool criterion8() {
    auto paper_rows = run_suite(make_suite("paper"));     // throws on divergence
    auto scaling_rows = run_suite(make_suite("scaling"));
    bool reached_1000 = false;
    for (const auto& row : scaling_rows) {
        if (row.skipped) return false;
        if (row.bench_case.n == 1000) reached_1000 = true;
    }
    return reached_1000 && !paper_rows.empty();
}

}  // namespace

int main() {
    Counter c;
    criterion(1, "section-2 worked example p4^(1)(22)=34 and its expansions",
              [&] { return criterion1(c); });
    criterion(2, "section-3 worked example p3^(2)(18)=12 with terms 5,4,2,1",
              [&] { return criterion2(c); });
    criterion(3, "engine equals enumeration on n<=40, k<=10, d<=4, r<=4, all modes",
              [&] { return criterion3(c); });
    criterion(4, "pentagonal and length-sum paths agree (n<=200 column sums, n<=2000)",
              [&] { return criterion4(c); });
    criterion(5, "all identity grids pass at their stated ranges",
              [&] { return criterion5(c); });
    criterion(6, "generalized-m erratum detected (paper fails, corrected passes)",
              [&] { return criterion6(c); });
    criterion(7, "bijection round-trip, weight, gap, image-set laws for n<=15",
              [] { return criterion7(); });
    criterion(8, "bench counts agree across methods; p(n) suite reaches n=1000",
              [] { return criterion8(); });
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
