#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "blax/errors.hpp"
#include "blax/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& body, const std::string& report_path) {
    if (report_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(report_path);
    if (!out) throw blax::MalformedInput("cannot write report to '" + report_path + "'");
    out << body;
}

int run_checks(const std::string& scenario_path, const std::vector<std::string>& checks,
               int order, const std::string& report_path, const std::string& format) {
    const auto sc = blax::load_scenario(scenario_path);
    const auto report = blax::run(sc, checks, order);
    emit(format == "machine" ? report.machine() : report.text(), report_path);
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int run_expand(const std::string& scenario_path, int order,
               const std::string& report_path, const std::string& format) {
    const auto sc = blax::load_scenario(scenario_path);
    if (!sc.builtin_pcm)
        throw blax::MalformedInput("expand needs the builtin pcm Lax matrix");
    const auto pcm = blax::build_pcm(sc.algebra, false);
    const auto series = blax::charge_densities(pcm, sc.k, order);
    std::ostringstream os;
    if (format == "machine") {
        os << "[\n";
        for (std::size_t k = 1; k < series.coeffs.size(); ++k)
            os << "  {\"power\": " << k + 1 << ", \"coefficient\": \""
               << series.coeffs[k].str() << "\"}" << (k + 1 < series.coeffs.size() ? "," : "")
               << "\n";
        os << "]\n";
    } else {
        for (std::size_t k = 1; k < series.coeffs.size(); ++k)
            os << "lambda^-" << k + 1 << ": " << series.coeffs[k].str() << "\n";
    }
    emit(os.str(), report_path);
    return kExitPass;
}

int run_enumerate(const std::string& scenario_path, const std::string& report_path,
                  const std::string& format) {
    const auto sc = blax::load_scenario(scenario_path);
    const auto pcm = blax::build_pcm(sc.algebra, false);
    std::ostringstream os;
    const auto all = blax::restr_enumerate_diagonal(sc.algebra.N);
    if (format == "machine") os << "[\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& k = all[i];
        std::string diag;
        for (int d = 0; d < k.dim(); ++d)
            diag += (d ? "," : "") + blax::to_string(k.at(d, d).constant_value());
        const bool admissible = blax::restr_residual(pcm, k, sc.sigma).is_zero();
        if (format == "machine")
            os << "  {\"diag\": [" << diag << "], \"admissible\": "
               << (admissible ? "true" : "false") << "}" << (i + 1 < all.size() ? "," : "")
               << "\n";
        else
            os << "diag(" << diag << "): " << (admissible ? "admissible" : "rejected")
               << "\n";
    }
    if (format == "machine") os << "]\n";
    emit(os.str(), report_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary-extension toolkit for non-ultralocal linear Poisson algebras"};
    app.require_subcommand(1);

    std::string scenario_path, report_path, format = "text";
    std::vector<std::string> checks;
    int order = 2;
    int lattice = 0;
    long long seed = -1;

    const auto add_common = [&](CLI::App* cmd, bool with_checks) {
        cmd->add_option("--scenario", scenario_path, "scenario file")->required();
        cmd->add_option("--report", report_path, "write the report to this path");
        cmd->add_option("--format", format, "text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
        if (with_checks) cmd->add_option("--check", checks, "check names to run");
    };

    auto* check = app.add_subcommand("check", "run the symbolic check suites");
    add_common(check, true);
    check->add_option("--order", order, "largest trace power for the traces check");

    auto* charges = app.add_subcommand("charges", "numeric boundary non-local charges");
    add_common(charges, false);
    charges->add_option("--lattice", lattice, "override the lattice size");
    charges->add_option("--seed", seed, "override the current-sample seed");

    auto* expand = app.add_subcommand("expand", "Laurent series of the trace charges");
    add_common(expand, false);
    int expand_order = 4;
    expand->add_option("--order", expand_order, "number of Laurent coefficients");

    auto* enumerate = app.add_subcommand("enumerate-k", "diagonal involutive boundary matrices");
    add_common(enumerate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (check->parsed()) return run_checks(scenario_path, checks, order, report_path, format);
        if (charges->parsed()) {
            auto sc = blax::load_scenario(scenario_path);
            if (lattice > 0) sc.numeric.lattice = lattice;
            if (seed >= 0) sc.numeric.seed = static_cast<unsigned>(seed);
            const auto report = blax::run(sc, {"charges"});
            emit(format == "machine" ? report.machine() : report.text(), report_path);
            return report.all_pass() ? kExitPass : kExitCheckFailure;
        }
        if (expand->parsed()) return run_expand(scenario_path, expand_order, report_path, format);
        if (enumerate->parsed()) return run_enumerate(scenario_path, report_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
