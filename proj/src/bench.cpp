#include "partition_kit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

namespace pkit {

std::string bench_method_name(BenchMethod m) {
    switch (m) {
        case BenchMethod::Recurrence: return "recurrence";
        case BenchMethod::Reduction: return "reduction";
        case BenchMethod::Enumeration: return "enumeration";
        case BenchMethod::Pentagonal: return "pentagonal";
        case BenchMethod::LengthSum: return "length-sum";
    }
    return "?";
}

namespace {

ConstraintSpec spec_of(const BenchCase& bc) {
    return bc.k >= 0 ? ConstraintSpec::exactly(bc.k, bc.r, bc.d)
                     : ConstraintSpec::any(bc.r, bc.d);
}

// A fresh Counter per evaluation so memo hits do not flatter the timing.
BigCount evaluate(const BenchCase& bc, const EnumerationBudget& budget) {
    switch (bc.method) {
        case BenchMethod::Recurrence: {
            Counter c;
            return c.count(bc.n, spec_of(bc), Method::Recurrence);
        }
        case BenchMethod::Reduction: {
            Counter c;
            return c.count(bc.n, spec_of(bc), Method::Reduction);
        }
        case BenchMethod::Enumeration:
            return count_by_enumeration(bc.n, spec_of(bc), budget);
        case BenchMethod::Pentagonal: {
            Counter c;
            return c.p_total(bc.n);
        }
        case BenchMethod::LengthSum:
            return Counter::p_total_by_length_sum_upto(bc.n).back();
    }
    return 0;
}

}  // namespace

std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases,
                                const EnumerationBudget& budget) {
    std::vector<BenchRow> rows;
    std::map<std::tuple<int64_t, int64_t, int64_t, int64_t>,
             std::pair<BigCount, BenchMethod>>
        seen;

    for (const auto& bc : cases) {
        if (bc.repetitions < 1)
            throw std::invalid_argument("run_suite: repetitions must be >= 1");
        BenchRow row{bc};
        if (bc.method == BenchMethod::Enumeration && bc.n > budget.max_weight) {
            row.skipped = true;
            rows.push_back(std::move(row));
            continue;
        }
        for (int w = 0; w < bc.warmup; ++w) evaluate(bc, budget);
        std::vector<int64_t> timings;
        BigCount value;
        for (int rep = 0; rep < bc.repetitions; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            value = evaluate(bc, budget);
            auto t1 = std::chrono::steady_clock::now();
            timings.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        std::sort(timings.begin(), timings.end());
        row.nanos = timings[timings.size() / 2];
        row.count = value;

        auto key = std::make_tuple(bc.n, bc.k, bc.d, bc.r);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, std::make_pair(value, bc.method));
        } else if (it->second.first != value) {
            throw ConsistencyError(
                "bench count mismatch on key (n=" + std::to_string(bc.n) +
                ", k=" + std::to_string(bc.k) + ", d=" + std::to_string(bc.d) +
                ", r=" + std::to_string(bc.r) + "): " +
                bench_method_name(it->second.second) + " -> " +
                to_decimal(it->second.first) + ", " + bench_method_name(bc.method) +
                " -> " + to_decimal(value));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BenchCase> make_suite(const std::string& name) {
    std::vector<BenchCase> cases;
    if (name == "paper") {
        const std::tuple<int64_t, int64_t, int64_t, int64_t> keys[] = {
            {22, 4, 1, 1}, {18, 3, 2, 1}, {13, 2, 2, 1}, {0, 0, 0, 1}, {40, 5, 2, 1},
        };
        for (auto [n, k, d, r] : keys)
            for (auto m : {BenchMethod::Recurrence, BenchMethod::Reduction,
                           BenchMethod::Enumeration})
                cases.push_back({m, n, k, d, r});
    } else if (name == "scaling") {
        for (int64_t n = 100; n <= 1000; n += 100)
            for (auto m : {BenchMethod::Pentagonal, BenchMethod::LengthSum})
                cases.push_back({m, n, -1, 0, 1, 3, 1});
    } else {
        throw std::invalid_argument("unknown bench suite: '" + name + "'");
    }
    return cases;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "method,n,k,d,r,nanos,count\n";
    for (const auto& row : rows) {
        const auto& bc = row.bench_case;
        os << bench_method_name(bc.method) << ',' << bc.n << ',' << bc.k << ','
           << bc.d << ',' << bc.r << ',';
        if (row.skipped)
            os << "skipped,";
        else
            os << row.nanos << ',' << to_decimal(row.count);
        os << '\n';
    }
}

}  // namespace pkit
