#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition_kit/counter.hpp"
#include "partition_kit/enumerate.hpp"
#include "partition_kit/types.hpp"

namespace pkit {

enum class BenchMethod { Recurrence, Reduction, Enumeration, Pentagonal, LengthSum };

std::string bench_method_name(BenchMethod m);

/// A single timed key. k = -1 means unconstrained length (the p(n)
/// methods); otherwise the key counts partitions with exactly k parts.
struct BenchCase {
    BenchMethod method;
    int64_t n;
    int64_t k;  // -1: any length
    int64_t d;
    int64_t r;
    int repetitions = 3;
    int warmup = 1;
};

struct BenchRow {
    BenchCase bench_case;
    bool skipped = false;   // enumeration over budget
    int64_t nanos = 0;      // median over repetitions
    BigCount count;
};

/// Counts disagreeing across methods on the same key; names the key and
/// both values.
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Runs cases sequentially (timing fidelity), medians the repetitions,
/// and cross-checks that every executed key yields the same count under
/// every method. Throws ConsistencyError on divergence.
std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases,
                                const EnumerationBudget& budget = {});

/// Named suites: "paper" (the worked-example keys, all three methods) and
/// "scaling" (p(n) for n = 100,200,...,1000 through both p(n) paths).
std::vector<BenchCase> make_suite(const std::string& name);

/// CSV columns: method,n,k,d,r,nanos,count. Skipped rows carry "skipped"
/// in the nanos column and an empty count.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace pkit
