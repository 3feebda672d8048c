#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition_kit/enumerate.hpp"
#include "partition_kit/types.hpp"

namespace pkit {

/// Precondition failure in the inverse map, pinpointing the offending part
/// or gap of the candidate image.
class BijectionError : public std::runtime_error {
  public:
    enum class Kind { WrongLength, PartTooSmall, GapTooSmall };

    BijectionError(Kind kind, int64_t index, std::string msg)
        : std::runtime_error(std::move(msg)), kind(kind), index(index) {}

    Kind kind;
    int64_t index;  // 1-based part index (first part of the violating gap)
};

/// Pads lambda with zeros to length L, then adds 1 + (L-i)*d to the i-th
/// part (1-indexed from the largest). The image has exactly L positive
/// parts with adjacent gaps >= d and weight |lambda| + L + d*L(L-1)/2.
Partition bijection_forward(const Partition& lambda, int64_t L, int64_t d);

/// Inverse of bijection_forward: strips the staircase and the all-ones
/// layer, then drops trailing zeros. Throws BijectionError when mu is not
/// a valid image (wrong length, part below its floor, or gap < d).
Partition bijection_inverse(const Partition& mu, int64_t L, int64_t d);

struct BijectivityReport {
    int64_t n = 0;
    int64_t padded_length = 0;
    int64_t gap = 0;
    uint64_t pairs = 0;
    bool pass = false;
    std::vector<std::string> violations;
};

/// Enumerates all partitions of n, maps them forward with (L, d), and
/// checks distinctness, image validity, round trips, and set equality
/// against the directly enumerated target set.
BijectivityReport verify_bijectivity(int64_t n, int64_t L, int64_t d,
                                     const EnumerationBudget& budget = {});

}  // namespace pkit
