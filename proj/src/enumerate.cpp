#include "partition_kit/enumerate.hpp"

#include <algorithm>
#include <string>

namespace pkit {

namespace {

// Max weight addable with j more parts after a part of size v: the staircase
// v-d, v-2d, ..., truncated once entries drop below r.
int64_t max_fill(int64_t v, int64_t d, int64_t r, int64_t j) {
    int64_t acc = 0;
    for (int64_t t = 1; t <= j; ++t) {
        int64_t part = v - t * d;
        if (part < r) break;
        acc += part;
    }
    return acc;
}

struct Enumerator {
    const ConstraintSpec& spec;
    const EnumerationBudget& budget;
    const std::function<void(const Partition&)>& visit;
    Partition current;
    uint64_t emitted = 0;
    bool stopped = false;

    bool emit() {
        if (budget.max_count && emitted >= *budget.max_count) {
            if (budget.fail_fast)
                throw BudgetExceededError("enumeration count cap of " +
                                          std::to_string(*budget.max_count) + " exceeded");
            stopped = true;
            return false;
        }
        visit(current);
        ++emitted;
        return true;
    }

    bool length_ok_now() const {
        switch (spec.mode) {
            case LengthMode::Exactly: return current.length() == spec.length;
            case LengthMode::AtMost: return current.length() <= spec.length;
            case LengthMode::Any: return true;
        }
        return false;
    }

    // Parts still allowed after the current prefix; -1 means unlimited.
    int64_t slots_left() const {
        if (spec.mode == LengthMode::Any) return -1;
        return spec.length - current.length();
    }

    void descend(int64_t rem, int64_t cap) {
        if (stopped) return;
        if (rem == 0) {
            if (length_ok_now()) emit();
            return;
        }
        int64_t slots = slots_left();
        if (slots == 0) return;
        const int64_t d = spec.min_gap;
        const int64_t r = spec.min_part;
        int64_t hi = std::min(cap, rem);
        for (int64_t v = hi; v >= r && !stopped; --v) {
            int64_t rest = rem - v;
            if (rest > 0) {
                // Some further part must fit below v.
                if (v - d < r || rest < r) continue;
                int64_t j = (slots < 0) ? rest / r : slots - 1;
                if (spec.mode == LengthMode::Exactly) {
                    if (rest < min_weight(j, d, r)) continue;
                }
                if (rest > max_fill(v, d, r, j)) continue;
            } else if (spec.mode == LengthMode::Exactly && slots != 1) {
                continue;  // would close the partition short of k parts
            }
            current.parts.push_back(v);
            descend(rest, v - d);
            current.parts.pop_back();
        }
    }

    uint64_t run(int64_t n) {
        if (!spec.valid()) throw InvalidSpecError("enumerate: invalid constraint spec");
        if (n > budget.max_weight)
            throw BudgetExceededError("enumeration weight " + std::to_string(n) +
                                      " exceeds budget max_weight " +
                                      std::to_string(budget.max_weight));
        if (n < 0) return 0;
        descend(n, n);
        return emitted;
    }
};

}  // namespace

uint64_t for_each_partition(int64_t n, const ConstraintSpec& spec,
                            const EnumerationBudget& budget,
                            const std::function<void(const Partition&)>& visit) {
    Enumerator e{spec, budget, visit};
    return e.run(n);
}

std::vector<Partition> enumerate_partitions(int64_t n, const ConstraintSpec& spec,
                                            const EnumerationBudget& budget) {
    std::vector<Partition> out;
    for_each_partition(n, spec, budget, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigCount count_by_enumeration(int64_t n, const ConstraintSpec& spec,
                              const EnumerationBudget& budget) {
    uint64_t c = for_each_partition(n, spec, budget, [](const Partition&) {});
    return BigCount(static_cast<unsigned long>(c));
}

}  // namespace pkit
