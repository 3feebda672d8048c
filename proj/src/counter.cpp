#include "partition_kit/counter.hpp"

#include <mutex>
#include <stdexcept>

namespace pkit {

int64_t Counter::pentagonal_number(int64_t j) {
    if (j == 0) throw std::invalid_argument("pentagonal_number: j must be nonzero");
    return j * (3 * j - 1) / 2;
}

BigCount Counter::p_total(int64_t n) {
    if (n < 0) return 0;
    {
        std::shared_lock lock(ptotal_mutex_);
        if (static_cast<size_t>(n) < ptotal_cache_.size()) return ptotal_cache_[n];
    }
    std::unique_lock lock(ptotal_mutex_);
    if (ptotal_cache_.empty()) ptotal_cache_.push_back(1);
    for (int64_t m = static_cast<int64_t>(ptotal_cache_.size()); m <= n; ++m) {
        BigCount acc = 0;
        // Sign pattern ++--++-- over j = 1, -1, 2, -2, ...
        for (int64_t j = 1;; ++j) {
            int64_t g1 = pentagonal_number(j);
            int64_t g2 = pentagonal_number(-j);
            if (g1 > m && g2 > m) break;
            int sign = (j % 2 == 1) ? +1 : -1;
            if (g1 <= m) {
                if (sign > 0) acc += ptotal_cache_[m - g1]; else acc -= ptotal_cache_[m - g1];
            }
            if (g2 <= m) {
                if (sign > 0) acc += ptotal_cache_[m - g2]; else acc -= ptotal_cache_[m - g2];
            }
        }
        ptotal_cache_.push_back(acc);
    }
    return ptotal_cache_[n];
}

bool Counter::lookup_or_base(const CountKey& key, BigCount& out) const {
    if (key.k == 0) {
        out = (key.n == 0) ? 1 : 0;
        return true;
    }
    if (key.k < 0 || key.n < min_weight(key.k, key.d, key.r)) {
        out = 0;
        return true;
    }
    std::shared_lock lock(table_mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) {
        out = it->second;
        return true;
    }
    return false;
}

// Iterative memoized evaluation of the split recurrence
//   f(n,k,d,r) = f(n-r, k-1, d, r+d) + f(n-k, k, d, r).
// The explicit stack keeps depth independent of n.
BigCount Counter::exact_memo(int64_t n, int64_t k, int64_t d, int64_t r) {
    CountKey root{n, k, d, r};
    BigCount out;
    if (lookup_or_base(root, out)) return out;

    std::vector<CountKey> stack{root};
    BigCount left, right;
    while (!stack.empty()) {
        CountKey cur = stack.back();
        CountKey c1{cur.n - cur.r, cur.k - 1, cur.d, cur.r + cur.d};
        CountKey c2{cur.n - cur.k, cur.k, cur.d, cur.r};
        bool have1 = lookup_or_base(c1, left);
        bool have2 = lookup_or_base(c2, right);
        if (have1 && have2) {
            stack.pop_back();
            std::unique_lock lock(table_mutex_);
            table_.try_emplace(cur, left + right);  // write-once
        } else {
            if (!have1) stack.push_back(c1);
            if (!have2) stack.push_back(c2);
        }
    }
    lookup_or_base(root, out);
    return out;
}

BigCount Counter::p_exact_k(int64_t n, int64_t k) {
    if (n < 0 || k < 0) return 0;
    return exact_memo(n, k, 0, 1);
}

BigCount Counter::p_at_most_k(int64_t n, int64_t k) {
    if (n < 0 || k < 0) return 0;
    BigCount acc = 0;
    for (int64_t i = 0; i <= k && i <= n; ++i) acc += exact_memo(n, i, 0, 1);
    return acc;
}

std::vector<BigCount> Counter::p_total_by_length_sum_upto(int64_t n_max) {
    // dp[m] sweeps through p_{<=k}(m); after k reaches n_max it equals p(m).
    std::vector<BigCount> dp(static_cast<size_t>(n_max) + 1, 0);
    dp[0] = 1;
    for (int64_t k = 1; k <= n_max; ++k)
        for (int64_t m = k; m <= n_max; ++m) dp[m] += dp[m - k];
    return dp;
}

std::pair<int64_t, int64_t> Counter::reduce_staircase(int64_t n, int64_t k,
                                                      int64_t d, int64_t r) {
    if (k < 0 || d < 0 || r < 1)
        throw std::invalid_argument("reduce_staircase: need k >= 0, d >= 0, r >= 1");
    return {n - r * k - d * k * (k - 1) / 2, k};
}

BigCount Counter::p2_closed_form(int64_t n, int64_t d) {
    if (d < 0) throw std::invalid_argument("p2_closed_form: d must be >= 0");
    if (n < d) return 0;
    int64_t v = (n - d) / 2;
    return v < 0 ? BigCount(0) : BigCount(v);
}

BigCount Counter::min_part_count(int64_t n, int64_t r) {
    if (r < 1) throw std::invalid_argument("min_part_count: r must be >= 1");
    return count(n, ConstraintSpec::any(r, 0));
}

BigCount Counter::exact_by_method(int64_t n, int64_t k, int64_t d, int64_t r,
                                  Method method) {
    if (method == Method::Recurrence) return exact_memo(n, k, d, r);
    auto [reduced_n, kk] = reduce_staircase(n, k, d, r);
    return p_at_most_k(reduced_n, kk);
}

BigCount Counter::count(int64_t n, const ConstraintSpec& spec, Method method) {
    if (!spec.valid()) throw InvalidSpecError("count: invalid constraint spec");
    if (n < 0) return 0;
    switch (spec.mode) {
        case LengthMode::Exactly:
            return exact_by_method(n, spec.length, spec.min_gap, spec.min_part, method);
        case LengthMode::AtMost: {
            BigCount acc = 0;
            for (int64_t i = 0; i <= spec.length; ++i) {
                if (min_weight(i, spec.min_gap, spec.min_part) > n) break;
                acc += exact_by_method(n, i, spec.min_gap, spec.min_part, method);
            }
            return acc;
        }
        case LengthMode::Any: {
            // Unconstrained weight-only counting is just p(n).
            if (spec.min_gap == 0 && spec.min_part == 1) return p_total(n);
            BigCount acc = 0;
            for (int64_t i = 0; min_weight(i, spec.min_gap, spec.min_part) <= n; ++i)
                acc += exact_by_method(n, i, spec.min_gap, spec.min_part, method);
            return acc;
        }
    }
    return 0;
}

namespace {
BigCount exact_direct(int64_t n, int64_t k, int64_t d, int64_t r) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (k < 0 || n < min_weight(k, d, r)) return 0;
    return exact_direct(n - r, k - 1, d, r + d) + exact_direct(n - k, k, d, r);
}
}  // namespace

BigCount Counter::count_uncached(int64_t n, const ConstraintSpec& spec) {
    if (!spec.valid()) throw InvalidSpecError("count_uncached: invalid constraint spec");
    if (n < 0) return 0;
    switch (spec.mode) {
        case LengthMode::Exactly:
            return exact_direct(n, spec.length, spec.min_gap, spec.min_part);
        case LengthMode::AtMost: {
            BigCount acc = 0;
            for (int64_t i = 0; i <= spec.length; ++i)
                acc += exact_direct(n, i, spec.min_gap, spec.min_part);
            return acc;
        }
        case LengthMode::Any: {
            BigCount acc = 0;
            for (int64_t i = 0; min_weight(i, spec.min_gap, spec.min_part) <= n; ++i)
                acc += exact_direct(n, i, spec.min_gap, spec.min_part);
            return acc;
        }
    }
    return 0;
}

size_t Counter::table_size() const {
    std::shared_lock lock(table_mutex_);
    return table_.size();
}

}  // namespace pkit
