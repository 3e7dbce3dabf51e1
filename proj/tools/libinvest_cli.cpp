#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "libinvest/corpus.hpp"
#include "libinvest/error.hpp"

namespace {

using namespace libinvest;

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

// LIBINVEST_OUTPUT_DIR only redirects relative output paths; it never
// affects metric values.
std::string resolve_output(const std::string& destination) {
    if (destination.empty() || destination == "-") return destination;
    const char* dir = std::getenv("LIBINVEST_OUTPUT_DIR");
    std::filesystem::path path(destination);
    if (dir != nullptr && *dir != '\0' && path.is_relative())
        return (std::filesystem::path(dir) / path).string();
    return destination;
}

int fail(const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"library investment metrics (LIR/LIL/PS) over source trees"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("libinvest ") + kToolVersion);

    std::string name = "project";
    std::vector<std::string> program_dirs;
    std::vector<std::string> library_dirs;
    std::string profile = "cpp-thesis";
    std::string vr_mode = "pooled";
    double log_base = 10.0;
    std::string format = "json";
    std::string output = "-";
    int decimals = 2;
    std::optional<std::uint64_t> n_star;
    bool timestamp = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one project");
    analyze_cmd->add_option("--name", name, "project name used in the report");
    analyze_cmd->add_option("--project", program_dirs, "program source directory (repeatable)")
        ->required();
    analyze_cmd->add_option("--library", library_dirs, "library source directory (repeatable)");
    analyze_cmd->add_option("--profile", profile, "built-in profile name or profile file");
    analyze_cmd->add_option("--vr-mode", vr_mode, "pooled|summed")
        ->check(CLI::IsMember({"pooled", "summed"}));
    analyze_cmd->add_option("--log-base", log_base, "logarithm base (default 10)");
    analyze_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--output", output, "destination file, or - for stdout");
    analyze_cmd->add_option("--decimals", decimals, "display decimals for csv output");
    analyze_cmd->add_option("--n-star", n_star, "input/output parameter count override");
    analyze_cmd->add_flag("--timestamp", timestamp, "stamp the report metadata with the UTC time");

    std::vector<std::string> manifests;
    auto* corpus_cmd = app.add_subcommand("corpus", "analyze a corpus of project manifests");
    corpus_cmd->add_option("--manifest", manifests, "manifest file (repeatable)")->required();
    corpus_cmd->add_option("--vr-mode", vr_mode, "override pooled|summed for every project")
        ->check(CLI::IsMember({"pooled", "summed"}));
    corpus_cmd->add_option("--log-base", log_base, "override logarithm base for every project");
    corpus_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    corpus_cmd->add_option("--output", output, "destination file, or - for stdout");
    corpus_cmd->add_option("--decimals", decimals, "display decimals for csv output");
    corpus_cmd->add_flag("--timestamp", timestamp, "stamp the report metadata with the UTC time");

    CLI11_PARSE(app, argc, argv);

    ReportFormat report_format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;

    try {
        if (analyze_cmd->parsed()) {
            AnalysisOptions options;
            options.vr_mode = vr_mode == "summed" ? VrMode::Summed : VrMode::Pooled;
            options.log_base = log_base;
            options.decimals = decimals;
            options.n_star = n_star;
            if (options.log_base <= 1.0) throw ProjectError("log base must be > 1");

            ProjectBundle bundle =
                load_project_dirs(name, program_dirs, library_dirs, profile, options);
            ProjectAnalysis analysis = analyze(bundle);

            CorpusRow row;
            row.project = analysis.project;
            row.analysis = analysis;
            CorpusReport report = corpus_from_analyses({std::move(row)}, profile, options);
            if (timestamp) report.timestamp = utc_now();
            write_report(render_report(report, report_format), resolve_output(output));
        } else {
            std::optional<AnalysisOptions> shared;
            if (corpus_cmd->count("--vr-mode") > 0 || corpus_cmd->count("--log-base") > 0) {
                AnalysisOptions options;
                options.vr_mode = vr_mode == "summed" ? VrMode::Summed : VrMode::Pooled;
                options.log_base = log_base;
                options.decimals = decimals;
                shared = options;
            }
            CorpusReport report = run_corpus(manifests, shared);
            if (corpus_cmd->count("--decimals") > 0) report.decimals = decimals;
            if (timestamp) report.timestamp = utc_now();
            write_report(render_report(report, report_format), resolve_output(output));
        }
    } catch (const std::exception& e) {
        return fail(e);
    }
    return 0;
}
