#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pkit {

/// Arbitrary-precision nonnegative count. p(n) leaves 64-bit range near
/// n ~ 400, so counts are big integers from the start.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& c) { return c.get_str(); }

/// Weakly decreasing sequence of positive integers.
struct Partition {
    std::vector<int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<int64_t> p) : parts(std::move(p)) {}

    int64_t weight() const {
        int64_t w = 0;
        for (int64_t p : parts) w += p;
        return w;
    }
    int64_t length() const { return static_cast<int64_t>(parts.size()); }

    bool well_formed() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        }
        return true;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// "3,2,1" for (3,2,1); "" for the empty partition.
    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s;
    }
};

enum class LengthMode { Any, Exactly, AtMost };

/// Constraint bundle: length mode, minimum part r >= 1, minimum adjacent
/// gap d >= 0. d = 0 and r = 1 mean unconstrained; both are ordinary
/// parameter values, not errors.
struct ConstraintSpec {
    LengthMode mode = LengthMode::Any;
    int64_t length = 0;    // k; ignored when mode == Any
    int64_t min_part = 1;  // r
    int64_t min_gap = 0;   // d

    static ConstraintSpec exactly(int64_t k, int64_t r = 1, int64_t d = 0) {
        return {LengthMode::Exactly, k, r, d};
    }
    static ConstraintSpec at_most(int64_t k, int64_t r = 1, int64_t d = 0) {
        return {LengthMode::AtMost, k, r, d};
    }
    static ConstraintSpec any(int64_t r = 1, int64_t d = 0) {
        return {LengthMode::Any, 0, r, d};
    }

    bool valid() const {
        if (min_part < 1 || min_gap < 0) return false;
        if (mode != LengthMode::Any && length < 0) return false;
        return true;
    }

    bool matches(const Partition& p) const {
        if (!p.well_formed()) return false;
        switch (mode) {
            case LengthMode::Exactly:
                if (p.length() != length) return false;
                break;
            case LengthMode::AtMost:
                if (p.length() > length) return false;
                break;
            case LengthMode::Any:
                break;
        }
        for (size_t i = 0; i < p.parts.size(); ++i) {
            if (p.parts[i] < min_part) return false;
            if (i + 1 < p.parts.size() && p.parts[i] - p.parts[i + 1] < min_gap)
                return false;
        }
        return true;
    }
};

/// Smallest weight achievable by exactly k parts with minimum part r and
/// adjacent gaps >= d: the staircase r, r+d, ..., r+(k-1)d.
inline int64_t min_weight(int64_t k, int64_t d, int64_t r) {
    return r * k + d * k * (k - 1) / 2;
}

class InvalidSpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace pkit
