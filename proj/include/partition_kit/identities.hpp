#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "partition_kit/counter.hpp"
#include "partition_kit/types.hpp"

namespace pkit {

enum class IdentityFamily {
    Prop1AltSum,
    Prop2Split,
    Cor3D1Sum,
    Prop4Shift,
    Prop5Split,
    Cor6GeneralSum,
    IteratedExpansion,
    ShiftDMinus1,
    DurfeeRR1,
    DurfeeRR2,
    Rel39Multiple,
    TheoremMain,
    GeneralizedM,
    DeltaTable,
};

enum class GeneralizedFormula { Paper, Corrected };

std::string family_name(IdentityFamily f);
std::optional<IdentityFamily> family_from_name(const std::string& name);

/// One evaluated grid cell: both sides plus the quantified parameters.
struct CellResult {
    std::map<std::string, int64_t> params;
    BigCount lhs;
    BigCount rhs;
    bool pass() const { return lhs == rhs; }
};

struct GridRanges {
    int64_t n_max = 0;
    int64_t k_max = 0;
    int64_t d_max = 0;
    int64_t m_max = 0;
    GeneralizedFormula formula = GeneralizedFormula::Paper;  // GENERALIZED_M only
};

struct VerificationReport {
    std::string family;
    GridRanges ranges;
    uint64_t cells = 0;
    std::vector<CellResult> failures;
    double elapsed_ms = 0.0;

    bool pass() const { return failures.empty(); }
    /// Stable key order; elapsed_ms is the only non-reproducible field.
    nlohmann::ordered_json to_json() const;
};

/// One term of an iterated Corollary-6 expansion: a count of partitions of
/// `argument` with exactly `length` d-distant parts.
struct ExpansionTerm {
    int64_t length;
    int64_t argument;
};

struct ExpansionResult {
    std::vector<ExpansionTerm> terms;  // argument >= 0 terms, paper order
    BigCount total;
    uint64_t zero_value_terms = 0;
    uint64_t positive_arg_terms = 0;
};

/// Expands count(n, Exactly(k), d) down to terms of the given target
/// length by repeated application of the k -> k-1 sum.
ExpansionResult iterated_expansion(Counter& c, int64_t n, int64_t k, int64_t d,
                                   int64_t target_length);

// Per-family cell checks. Both sides always go through different code
// paths (staircase reduction vs. term sums vs. closed forms).
CellResult check_prop1(Counter& c, int64_t n, int64_t k);
CellResult check_prop2(Counter& c, int64_t n, int64_t k);
CellResult check_cor3(Counter& c, int64_t n, int64_t k);
CellResult check_prop4(Counter& c, int64_t n, int64_t k, int64_t d);
CellResult check_prop5(Counter& c, int64_t n, int64_t k, int64_t d);
CellResult check_cor6(Counter& c, int64_t n, int64_t k, int64_t d);
CellResult check_iterated_expansion(Counter& c, int64_t n, int64_t k, int64_t d,
                                    int64_t target_length);
CellResult check_shift_d(Counter& c, int64_t n, int64_t k, int64_t d);
CellResult check_durfee(Counter& c, int64_t n, int variant);
CellResult check_rel39(Counter& c, int64_t n, int64_t m);
CellResult check_theorem_main(Counter& c, int64_t n, int64_t d);
CellResult check_generalized_m(Counter& c, int64_t n, int64_t m, int64_t d,
                               GeneralizedFormula formula);
CellResult check_delta_table(Counter& c, int64_t k, int64_t d);

/// Evaluates a whole family over its ranges; deterministic output.
VerificationReport run_grid(Counter& c, IdentityFamily family, const GridRanges& ranges);

/// Ranges matching the worked examples and tables; used as CLI defaults.
GridRanges default_ranges(IdentityFamily family);

}  // namespace pkit
