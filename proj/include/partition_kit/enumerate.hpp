#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "partition_kit/types.hpp"

namespace pkit {

/// Enumeration is exponential, so its limits are explicit.
struct EnumerationBudget {
    int64_t max_weight = 60;
    std::optional<uint64_t> max_count;  // no cap by default
    bool fail_fast = true;              // throw (vs. truncate) when the cap trips
};

class BudgetExceededError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Calls visit for every partition of n satisfying spec, exactly once, in
/// lexicographically decreasing order of part sequences. Returns the number
/// of partitions visited.
uint64_t for_each_partition(int64_t n, const ConstraintSpec& spec,
                            const EnumerationBudget& budget,
                            const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(int64_t n, const ConstraintSpec& spec,
                                            const EnumerationBudget& budget = {});

BigCount count_by_enumeration(int64_t n, const ConstraintSpec& spec,
                              const EnumerationBudget& budget = {});

}  // namespace pkit
