#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "partition_kit/bench.hpp"
#include "partition_kit/bijection.hpp"
#include "partition_kit/counter.hpp"
#include "partition_kit/enumerate.hpp"
#include "partition_kit/identities.hpp"
#include "partition_kit/types.hpp"

namespace {

using namespace pkit;

EnumerationBudget budget_from_env() {
    EnumerationBudget budget;
    if (const char* env = std::getenv("PARTITION_KIT_BUDGET")) {
        try {
            budget.max_weight = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric PARTITION_KIT_BUDGET\n";
        }
    }
    return budget;
}

struct ConstraintFlags {
    int64_t k = -1;
    int64_t at_most = -1;
    int64_t min_part = 1;
    int64_t gap = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--k", k, "require exactly k parts");
        cmd->add_option("--at-most", at_most, "require at most k parts");
        cmd->add_option("--min-part", min_part, "minimum part (default 1)");
        cmd->add_option("--gap", gap, "minimum adjacent gap (default 0)");
    }

    ConstraintSpec to_spec() const {
        if (k >= 0 && at_most >= 0)
            throw CLI::ValidationError("--k and --at-most are mutually exclusive");
        if (k >= 0) return ConstraintSpec::exactly(k, min_part, gap);
        if (at_most >= 0) return ConstraintSpec::at_most(at_most, min_part, gap);
        return ConstraintSpec::any(min_part, gap);
    }
};

int cmd_count(int64_t n, const ConstraintFlags& flags, const std::string& method_name) {
    Method method = Method::Auto;
    if (method_name == "recurrence") method = Method::Recurrence;
    else if (method_name == "reduction") method = Method::Reduction;
    else if (method_name != "auto")
        throw CLI::ValidationError("--method must be recurrence, reduction, or auto");
    Counter counter;
    std::cout << to_decimal(counter.count(n, flags.to_spec(), method)) << "\n";
    return 0;
}

int cmd_enumerate(int64_t n, const ConstraintFlags& flags, int64_t limit,
                  const std::string& format) {
    EnumerationBudget budget = budget_from_env();
    if (limit >= 0) {
        budget.max_count = static_cast<uint64_t>(limit);
        budget.fail_fast = false;
    }
    auto parts = enumerate_partitions(n, flags.to_spec(), budget);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : parts) arr.push_back(p.parts);
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "parts\n";
        for (const auto& p : parts) std::cout << '"' << p.to_string() << "\"\n";
    } else if (format == "plain") {
        for (const auto& p : parts) std::cout << p.to_string() << "\n";
        std::cout << "total: " << parts.size() << "\n";
    } else {
        throw CLI::ValidationError("--format must be plain, json, or csv");
    }
    return 0;
}

int cmd_verify(const std::string& family_name_str, const GridRanges& overrides,
               bool have_n, bool have_k, bool have_d, bool have_m,
               const std::string& formula, const std::string& format) {
    auto family = family_from_name(family_name_str);
    if (!family) throw CLI::ValidationError("unknown family: " + family_name_str);
    GridRanges ranges = default_ranges(*family);
    if (have_n) ranges.n_max = overrides.n_max;
    if (have_k) ranges.k_max = overrides.k_max;
    if (have_d) ranges.d_max = overrides.d_max;
    if (have_m) ranges.m_max = overrides.m_max;
    if (formula == "paper") ranges.formula = GeneralizedFormula::Paper;
    else if (formula == "corrected") ranges.formula = GeneralizedFormula::Corrected;
    else throw CLI::ValidationError("--formula must be paper or corrected");

    Counter counter;
    VerificationReport report = run_grid(counter, *family, ranges);
    if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else if (format == "plain") {
        std::cout << report.family << ": " << report.cells << " cells, "
                  << report.failures.size() << " failures\n";
        for (const auto& f : report.failures) {
            std::cout << "  FAIL";
            for (const auto& [key, value] : f.params) std::cout << ' ' << key << '=' << value;
            std::cout << " lhs=" << to_decimal(f.lhs) << " rhs=" << to_decimal(f.rhs)
                      << "\n";
        }
    } else {
        throw CLI::ValidationError("--format must be plain or json");
    }
    return report.pass() ? 0 : 1;
}

int cmd_bijection(int64_t n, int64_t L, int64_t d, bool check) {
    EnumerationBudget budget = budget_from_env();
    auto sources = enumerate_partitions(n, ConstraintSpec::any(), budget);
    for (const auto& lambda : sources) {
        Partition mu = bijection_forward(lambda, L, d);
        std::cout << lambda.to_string() << " -> " << mu.to_string() << "\n";
    }
    if (check) {
        auto report = verify_bijectivity(n, L, d, budget);
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& v : report.violations) std::cerr << v << "\n";
        return report.pass ? 0 : 1;
    }
    return 0;
}

int cmd_bench(const std::string& suite, const std::string& out_path) {
    auto rows = run_suite(make_suite(suite), budget_from_env());
    if (out_path.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("cannot open output file: " + out_path);
        write_csv(out, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of constrained integer partitions"};
    app.require_subcommand(1);

    int64_t n = 0;
    ConstraintFlags count_flags, enum_flags;
    std::string method = "auto", format = "plain";
    int64_t limit = -1;

    auto* count = app.add_subcommand("count", "count partitions under constraints");
    count->add_option("n", n, "weight")->required();
    count_flags.attach(count);
    count->add_option("--method", method, "recurrence|reduction|auto");

    auto* enumerate = app.add_subcommand("enumerate", "list partitions under constraints");
    enumerate->add_option("n", n, "weight")->required();
    enum_flags.attach(enumerate);
    enumerate->add_option("--limit", limit, "stop after this many partitions");
    enumerate->add_option("--format", format, "plain|json|csv");

    auto* verify = app.add_subcommand("verify", "check an identity family over a grid");
    std::string family, formula = "paper", verify_format = "json";
    GridRanges overrides;
    verify->add_option("--family", family, "identity family id")->required();
    auto* opt_n = verify->add_option("--n-max", overrides.n_max, "grid bound on n");
    auto* opt_k = verify->add_option("--k-max", overrides.k_max, "grid bound on k");
    auto* opt_d = verify->add_option("--d-max", overrides.d_max, "grid bound on d");
    auto* opt_m = verify->add_option("--m-max", overrides.m_max, "grid bound on m");
    verify->add_option("--formula", formula, "paper|corrected (GENERALIZED_M)");
    verify->add_option("--format", verify_format, "plain|json");

    auto* bijection = app.add_subcommand("bijection", "print the staircase bijection pairs");
    int64_t L = -1, d = 0;
    bool check = false;
    bijection->add_option("n", n, "weight of the source partitions")->required();
    bijection->add_option("--L", L, "padded length (default n)");
    bijection->add_option("--d", d, "minimum gap of the images");
    bijection->add_flag("--check", check, "also verify bijectivity against enumeration");

    auto* bench = app.add_subcommand("bench", "time the counting strategies");
    std::string suite, out_path;
    bench->add_option("--suite", suite, "suite name: paper|scaling")->required();
    bench->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(n, count_flags, method);
        if (enumerate->parsed()) return cmd_enumerate(n, enum_flags, limit, format);
        if (verify->parsed())
            return cmd_verify(family, overrides, static_cast<bool>(*opt_n),
                              static_cast<bool>(*opt_k), static_cast<bool>(*opt_d),
                              static_cast<bool>(*opt_m), formula, verify_format);
        if (bijection->parsed()) return cmd_bijection(n, L >= 0 ? L : n, d, check);
        if (bench->parsed()) return cmd_bench(suite, out_path);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
