#pragma once

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partition_kit/types.hpp"

namespace pkit {

enum class Method { Auto, Recurrence, Reduction };

/// Memoization key for the exact-length recurrence.
struct CountKey {
    int64_t n;
    int64_t k;
    int64_t d;
    int64_t r;
    bool operator==(const CountKey&) const = default;
};

struct CountKeyHash {
    size_t operator()(const CountKey& key) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (uint64_t v : {static_cast<uint64_t>(key.n), static_cast<uint64_t>(key.k),
                           static_cast<uint64_t>(key.d), static_cast<uint64_t>(key.r)}) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

/// Exact counting engine. All methods are pure functions of their inputs
/// plus the memo tables; stored values are write-once, so concurrent use
/// from several threads is safe.
class Counter {
  public:
    /// Generalized pentagonal number j(3j-1)/2, evaluated at
    /// j = 1, -1, 2, -2, ... Rejects j = 0.
    static int64_t pentagonal_number(int64_t j);

    /// p(n) via Euler's pentagonal-number recurrence. p(0) = 1, p(n<0) = 0.
    BigCount p_total(int64_t n);

    /// Partitions of n with exactly k parts, via the two-term recurrence
    /// p_k(n) = p_{k-1}(n-1) + p_k(n-k).
    BigCount p_exact_k(int64_t n, int64_t k);

    /// Partitions of n with at most k parts.
    BigCount p_at_most_k(int64_t n, int64_t k);

    /// p(0..n_max) computed through the length-sum path (rolling at-most-k
    /// table), independent of the pentagonal cache. Used as a cross-check
    /// against p_total.
    static std::vector<BigCount> p_total_by_length_sum_upto(int64_t n_max);

    /// Number of partitions of n satisfying spec.
    BigCount count(int64_t n, const ConstraintSpec& spec, Method method = Method::Auto);

    /// Same result as count(), computed by direct recursion with no memo
    /// table. Small inputs only; exists so memo soundness is testable.
    static BigCount count_uncached(int64_t n, const ConstraintSpec& spec);

    /// Staircase normalization: partitions of n with exactly k parts,
    /// min part >= r, gaps >= d, correspond to partitions of
    /// n - r*k - d*k(k-1)/2 with at most k parts.
    static std::pair<int64_t, int64_t> reduce_staircase(int64_t n, int64_t k,
                                                        int64_t d, int64_t r);

    /// Closed form for two d-distant parts: max(0, floor((n-d)/2)).
    static BigCount p2_closed_form(int64_t n, int64_t d);

    /// Partitions of n with every part >= r.
    BigCount min_part_count(int64_t n, int64_t r);

    size_t table_size() const;

  private:
    BigCount exact_memo(int64_t n, int64_t k, int64_t d, int64_t r);
    BigCount exact_by_method(int64_t n, int64_t k, int64_t d, int64_t r, Method method);
    bool lookup_or_base(const CountKey& key, BigCount& out) const;

    mutable std::shared_mutex table_mutex_;
    std::unordered_map<CountKey, BigCount, CountKeyHash> table_;

    mutable std::shared_mutex ptotal_mutex_;
    std::vector<BigCount> ptotal_cache_;
};

}  // namespace pkit
