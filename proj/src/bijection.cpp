#include "partition_kit/bijection.hpp"

#include <algorithm>
#include <set>

namespace pkit {

Partition bijection_forward(const Partition& lambda, int64_t L, int64_t d) {
    if (L < lambda.length())
        throw std::invalid_argument("bijection_forward: L smaller than partition length");
    if (d < 0) throw std::invalid_argument("bijection_forward: d must be >= 0");
    Partition mu;
    mu.parts.reserve(L);
    for (int64_t i = 1; i <= L; ++i) {
        int64_t li = (i <= lambda.length()) ? lambda.parts[i - 1] : 0;
        mu.parts.push_back(li + 1 + (L - i) * d);
    }
    return mu;
}

Partition bijection_inverse(const Partition& mu, int64_t L, int64_t d) {
    if (mu.length() != L)
        throw BijectionError(BijectionError::Kind::WrongLength, mu.length(),
                             "inverse: expected exactly " + std::to_string(L) +
                                 " parts, got " + std::to_string(mu.length()));
    for (int64_t i = 1; i < L; ++i) {
        if (mu.parts[i - 1] - mu.parts[i] < d)
            throw BijectionError(BijectionError::Kind::GapTooSmall, i,
                                 "inverse: gap below " + std::to_string(d) +
                                     " between parts " + std::to_string(i) + " and " +
                                     std::to_string(i + 1));
    }
    Partition lambda;
    for (int64_t i = 1; i <= L; ++i) {
        int64_t floor_i = 1 + (L - i) * d;
        if (mu.parts[i - 1] < floor_i)
            throw BijectionError(BijectionError::Kind::PartTooSmall, i,
                                 "inverse: part " + std::to_string(i) + " is " +
                                     std::to_string(mu.parts[i - 1]) + ", needs >= " +
                                     std::to_string(floor_i));
        int64_t li = mu.parts[i - 1] - floor_i;
        if (li > 0) lambda.parts.push_back(li);
    }
    return lambda;
}

BijectivityReport verify_bijectivity(int64_t n, int64_t L, int64_t d,
                                     const EnumerationBudget& budget) {
    if (n < 0 || d < 0 || L < n)
        throw std::invalid_argument("verify_bijectivity: need n >= 0, d >= 0, L >= n");
    BijectivityReport rep;
    rep.n = n;
    rep.padded_length = L;
    rep.gap = d;

    const int64_t target = n + L + d * L * (L - 1) / 2;
    std::set<Partition> images;
    auto sources = enumerate_partitions(n, ConstraintSpec::any(), budget);
    rep.pairs = sources.size();

    for (const auto& lambda : sources) {
        Partition mu = bijection_forward(lambda, L, d);
        if (mu.weight() != target)
            rep.violations.push_back("weight law broken for source " + lambda.to_string());
        if (!ConstraintSpec::exactly(L, 1, d).matches(mu))
            rep.violations.push_back("invalid image " + mu.to_string());
        if (!images.insert(mu).second)
            rep.violations.push_back("duplicate image " + mu.to_string());
        try {
            if (bijection_inverse(mu, L, d) != lambda)
                rep.violations.push_back("round trip mismatch for " + lambda.to_string());
        } catch (const BijectionError& e) {
            rep.violations.push_back(std::string("inverse rejected image: ") + e.what());
        }
    }

    EnumerationBudget target_budget = budget;
    target_budget.max_weight = std::max(budget.max_weight, target);
    auto expected = enumerate_partitions(target, ConstraintSpec::exactly(L, 1, d),
                                         target_budget);
    std::set<Partition> expected_set(expected.begin(), expected.end());
    if (expected_set != images)
        rep.violations.push_back("image set differs from enumerated target set (" +
                                 std::to_string(images.size()) + " vs " +
                                 std::to_string(expected_set.size()) + ")");

    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace pkit
