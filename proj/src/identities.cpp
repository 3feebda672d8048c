#include "partition_kit/identities.hpp"

#include <chrono>
#include <utility>

namespace pkit {

namespace {

const std::pair<IdentityFamily, const char*> kFamilyNames[] = {
    {IdentityFamily::Prop1AltSum, "PROP1_ALTSUM"},
    {IdentityFamily::Prop2Split, "PROP2_SPLIT"},
    {IdentityFamily::Cor3D1Sum, "COR3_D1_SUM"},
    {IdentityFamily::Prop4Shift, "PROP4_SHIFT"},
    {IdentityFamily::Prop5Split, "PROP5_SPLIT"},
    {IdentityFamily::Cor6GeneralSum, "COR6_GENERAL_SUM"},
    {IdentityFamily::IteratedExpansion, "ITERATED_EXPANSION"},
    {IdentityFamily::ShiftDMinus1, "SHIFT_D_MINUS1"},
    {IdentityFamily::DurfeeRR1, "DURFEE_RR1"},
    {IdentityFamily::DurfeeRR2, "DURFEE_RR2"},
    {IdentityFamily::Rel39Multiple, "REL39_MULTIPLE"},
    {IdentityFamily::TheoremMain, "THEOREM_MAIN"},
    {IdentityFamily::GeneralizedM, "GENERALIZED_M"},
    {IdentityFamily::DeltaTable, "DELTA_TABLE"},
};

// One application of the k -> k-1 expansion to a single term: arguments
// n - k*i + d - 1 for i = d, d+1, ... while they stay nonnegative.
std::vector<ExpansionTerm> expand_once(int64_t len, int64_t arg, int64_t d) {
    std::vector<ExpansionTerm> out;
    if (len < 1) return out;
    for (int64_t i = d;; ++i) {
        int64_t child = arg - len * i + d - 1;
        if (child < 0) break;
        out.push_back({len - 1, child});
    }
    return out;
}

}  // namespace

std::string family_name(IdentityFamily f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "UNKNOWN";
}

std::optional<IdentityFamily> family_from_name(const std::string& name) {
    for (const auto& [fam, fname] : kFamilyNames)
        if (name == fname) return fam;
    return std::nullopt;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    nlohmann::ordered_json r;
    r["n_max"] = ranges.n_max;
    r["k_max"] = ranges.k_max;
    r["d_max"] = ranges.d_max;
    r["m_max"] = ranges.m_max;
    if (family == "GENERALIZED_M")
        r["formula"] = ranges.formula == GeneralizedFormula::Paper ? "paper" : "corrected";
    j["ranges"] = r;
    j["cells"] = cells;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json cell;
        cell["params"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : f.params) cell["params"][key] = value;
        cell["lhs"] = to_decimal(f.lhs);
        cell["rhs"] = to_decimal(f.rhs);
        j["failures"].push_back(cell);
    }
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

ExpansionResult iterated_expansion(Counter& c, int64_t n, int64_t k, int64_t d,
                                   int64_t target_length) {
    if (k < 1 || target_length < 1 || target_length > k)
        throw std::invalid_argument("iterated_expansion: need 1 <= target <= k");
    ExpansionResult res;
    res.terms = {{k, n}};
    if (n < 0) res.terms.clear();
    for (int64_t len = k; len > target_length; --len) {
        std::vector<ExpansionTerm> next;
        for (const auto& term : res.terms) {
            auto children = expand_once(term.length, term.argument, d);
            next.insert(next.end(), children.begin(), children.end());
        }
        res.terms = std::move(next);
    }
    res.total = 0;
    for (const auto& term : res.terms) {
        BigCount v = c.count(term.argument,
                             ConstraintSpec::exactly(term.length, 1, d),
                             Method::Reduction);
        if (v == 0) ++res.zero_value_terms;
        if (term.argument >= 1) ++res.positive_arg_terms;
        res.total += v;
    }
    return res;
}

CellResult check_prop1(Counter& c, int64_t n, int64_t k) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 2, 1), Method::Recurrence);
    cell.rhs = 0;
    for (int64_t i = 0; i <= k; ++i) {
        BigCount term = c.count(n - i, ConstraintSpec::exactly(k - i, 1, 1),
                                Method::Reduction);
        if (i % 2 == 0) cell.rhs += term; else cell.rhs -= term;
    }
    return cell;
}

CellResult check_prop2(Counter& c, int64_t n, int64_t k) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, 1), Method::Recurrence);
    cell.rhs = 0;
    if (k >= 1)
        cell.rhs += c.count(n - 1, ConstraintSpec::exactly(k - 1, 2, 1), Method::Reduction);
    cell.rhs += c.count(n - k, ConstraintSpec::exactly(k, 1, 1), Method::Reduction);
    return cell;
}

CellResult check_cor3(Counter& c, int64_t n, int64_t k) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, 1), Method::Recurrence);
    cell.rhs = 0;
    for (int64_t i = 1; n - k * i >= 0; ++i)
        cell.rhs += c.count(n - k * i, ConstraintSpec::exactly(k - 1, 1, 1),
                            Method::Reduction);
    return cell;
}

CellResult check_prop4(Counter& c, int64_t n, int64_t k, int64_t d) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}, {"d", d}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, d), Method::Recurrence);
    cell.rhs = c.count(n + d * k, ConstraintSpec::exactly(k, d + 1, d), Method::Reduction);
    return cell;
}

CellResult check_prop5(Counter& c, int64_t n, int64_t k, int64_t d) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}, {"d", d}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, d), Method::Recurrence);
    cell.rhs = 0;
    if (k >= 1)
        cell.rhs += c.count(n - 1, ConstraintSpec::exactly(k - 1, d + 1, d),
                            Method::Reduction);
    cell.rhs += c.count(n - k, ConstraintSpec::exactly(k, 1, d), Method::Reduction);
    return cell;
}

CellResult check_cor6(Counter& c, int64_t n, int64_t k, int64_t d) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}, {"d", d}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, d), Method::Recurrence);
    cell.rhs = 0;
    for (const auto& term : expand_once(k, n, d))
        cell.rhs += c.count(term.argument, ConstraintSpec::exactly(term.length, 1, d),
                            Method::Reduction);
    return cell;
}

CellResult check_iterated_expansion(Counter& c, int64_t n, int64_t k, int64_t d,
                                    int64_t target_length) {
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}, {"d", d}, {"target", target_length}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, d), Method::Recurrence);
    cell.rhs = iterated_expansion(c, n, k, d, target_length).total;
    return cell;
}

CellResult check_shift_d(Counter& c, int64_t n, int64_t k, int64_t d) {
    if (d < 1) throw std::invalid_argument("check_shift_d: d must be >= 1");
    CellResult cell;
    cell.params = {{"n", n}, {"k", k}, {"d", d}};
    cell.lhs = c.count(n, ConstraintSpec::exactly(k, 1, d - 1), Method::Recurrence);
    cell.rhs = c.count(n + k * (k - 1) / 2, ConstraintSpec::exactly(k, 1, d),
                       Method::Reduction);
    return cell;
}

CellResult check_durfee(Counter& c, int64_t n, int variant) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("check_durfee: variant must be 1 or 2");
    CellResult cell;
    cell.params = {{"n", n}, {"variant", variant}};
    int64_t r = (variant == 1) ? 1 : 2;
    cell.lhs = c.count(n, ConstraintSpec::any(r, 2), Method::Recurrence);
    cell.rhs = 0;
    // i = 0 carries the empty-partition case p_{<=0}(0) = 1 so that n = 0
    // balances; for n >= 1 the i = 0 term vanishes.
    for (int64_t i = 0;; ++i) {
        int64_t arg = n - ((variant == 1) ? i * i : i * (i + 1));
        if (arg < 0) break;
        cell.rhs += c.p_at_most_k(arg, i);
    }
    return cell;
}

CellResult check_rel39(Counter& c, int64_t n, int64_t m) {
    if (m < 1) throw std::invalid_argument("check_rel39: m must be >= 1");
    CellResult cell;
    cell.params = {{"n", n}, {"m", m}};
    cell.lhs = c.p_total(n);
    cell.rhs = c.p_exact_k(m * n + n, m * n);
    return cell;
}

CellResult check_theorem_main(Counter& c, int64_t n, int64_t d) {
    CellResult cell;
    cell.params = {{"n", n}, {"d", d}};
    cell.lhs = c.p_total(n);
    cell.rhs = c.count(2 * n + d * n * (n - 1) / 2, ConstraintSpec::exactly(n, 1, d),
                       Method::Recurrence);
    return cell;
}

CellResult check_generalized_m(Counter& c, int64_t n, int64_t m, int64_t d,
                               GeneralizedFormula formula) {
    if (m < 1) throw std::invalid_argument("check_generalized_m: m must be >= 1");
    CellResult cell;
    cell.params = {{"n", n}, {"m", m}, {"d", d}};
    int64_t length = m * n;
    int64_t weight = (formula == GeneralizedFormula::Paper)
                         ? m * n + n + d * n * (n - 1) / 2
                         : m * n + n + d * length * (length - 1) / 2;
    cell.lhs = c.p_total(n);
    cell.rhs = c.count(weight, ConstraintSpec::exactly(length, 1, d), Method::Recurrence);
    return cell;
}

CellResult check_delta_table(Counter& c, int64_t k, int64_t d) {
    if (k < 1) throw std::invalid_argument("check_delta_table: k must be >= 1");
    (void)c;
    CellResult cell;
    cell.params = {{"k", k}, {"d", d}};
    // Probe n big enough that the expansion is nonempty; delta does not
    // depend on the choice.
    int64_t n = min_weight(k, d, 1) + 10 * k;
    auto terms = expand_once(k, n, d);
    cell.lhs = terms.empty() ? BigCount(-1) : BigCount(n - terms.front().argument);
    cell.rhs = d * (k - 1) + 1;
    return cell;
}

GridRanges default_ranges(IdentityFamily family) {
    switch (family) {
        case IdentityFamily::Prop1AltSum:
        case IdentityFamily::Prop2Split:
        case IdentityFamily::Cor3D1Sum:
            return {.n_max = 40, .k_max = 8};
        case IdentityFamily::Prop4Shift:
        case IdentityFamily::Prop5Split:
        case IdentityFamily::Cor6GeneralSum:
        case IdentityFamily::ShiftDMinus1:
            return {.n_max = 40, .k_max = 8, .d_max = 3};
        case IdentityFamily::IteratedExpansion:
            return {.n_max = 24, .k_max = 5, .d_max = 2};
        case IdentityFamily::DurfeeRR1:
        case IdentityFamily::DurfeeRR2:
            return {.n_max = 100};
        case IdentityFamily::Rel39Multiple:
            return {.n_max = 12, .m_max = 3};
        case IdentityFamily::TheoremMain:
            return {.n_max = 20, .d_max = 3};
        case IdentityFamily::GeneralizedM:
            return {.n_max = 8, .d_max = 2, .m_max = 3};
        case IdentityFamily::DeltaTable:
            return {.k_max = 5, .d_max = 3};
    }
    return {};
}

VerificationReport run_grid(Counter& c, IdentityFamily family, const GridRanges& ranges) {
    VerificationReport rep;
    rep.family = family_name(family);
    rep.ranges = ranges;
    auto start = std::chrono::steady_clock::now();

    auto record = [&rep](CellResult cell) {
        ++rep.cells;
        if (!cell.pass()) rep.failures.push_back(std::move(cell));
    };

    switch (family) {
        case IdentityFamily::Prop1AltSum:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 0; k <= ranges.k_max; ++k) record(check_prop1(c, n, k));
            break;
        case IdentityFamily::Prop2Split:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 0; k <= ranges.k_max; ++k) record(check_prop2(c, n, k));
            break;
        case IdentityFamily::Cor3D1Sum:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 1; k <= ranges.k_max; ++k) record(check_cor3(c, n, k));
            break;
        case IdentityFamily::Prop4Shift:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 0; k <= ranges.k_max; ++k)
                    for (int64_t d = 0; d <= ranges.d_max; ++d)
                        record(check_prop4(c, n, k, d));
            break;
        case IdentityFamily::Prop5Split:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 0; k <= ranges.k_max; ++k)
                    for (int64_t d = 0; d <= ranges.d_max; ++d)
                        record(check_prop5(c, n, k, d));
            break;
        case IdentityFamily::Cor6GeneralSum:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 1; k <= ranges.k_max; ++k)
                    for (int64_t d = 0; d <= ranges.d_max; ++d)
                        record(check_cor6(c, n, k, d));
            break;
        case IdentityFamily::IteratedExpansion:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 2; k <= ranges.k_max; ++k)
                    for (int64_t d = 0; d <= ranges.d_max; ++d)
                        for (int64_t t = 1; t <= k; ++t)
                            record(check_iterated_expansion(c, n, k, d, t));
            break;
        case IdentityFamily::ShiftDMinus1:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t k = 0; k <= ranges.k_max; ++k)
                    for (int64_t d = 1; d <= ranges.d_max; ++d)
                        record(check_shift_d(c, n, k, d));
            break;
        case IdentityFamily::DurfeeRR1:
            for (int64_t n = 0; n <= ranges.n_max; ++n) record(check_durfee(c, n, 1));
            break;
        case IdentityFamily::DurfeeRR2:
            for (int64_t n = 0; n <= ranges.n_max; ++n) record(check_durfee(c, n, 2));
            break;
        case IdentityFamily::Rel39Multiple:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t m = 1; m <= ranges.m_max; ++m) record(check_rel39(c, n, m));
            break;
        case IdentityFamily::TheoremMain:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t d = 0; d <= ranges.d_max; ++d)
                    record(check_theorem_main(c, n, d));
            break;
        case IdentityFamily::GeneralizedM:
            for (int64_t n = 0; n <= ranges.n_max; ++n)
                for (int64_t m = 2; m <= ranges.m_max; ++m)
                    for (int64_t d = 1; d <= ranges.d_max; ++d)
                        record(check_generalized_m(c, n, m, d, ranges.formula));
            break;
        case IdentityFamily::DeltaTable:
            for (int64_t k = 1; k <= ranges.k_max; ++k)
                for (int64_t d = 0; d <= ranges.d_max; ++d)
                    record(check_delta_table(c, k, d));
            break;
    }

    auto end = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return rep;
}

}  // namespace pkit
