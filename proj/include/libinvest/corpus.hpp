#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "libinvest/linkage.hpp"
#include "libinvest/metrics.hpp"

namespace libinvest {

struct AnalysisOptions {
    VrMode vr_mode = VrMode::Pooled;
    double log_base = 10.0;
    std::optional<std::uint64_t> n_star;  // overrides detection; unset = no n*
    int decimals = 2;                     // delimited-output display rounding
};

// One project's inputs: program sources, library sources, profile.
struct ProjectBundle {
    std::string name;
    std::vector<std::pair<std::string, std::string>> program_sources;  // (path, text)
    std::vector<std::pair<std::string, std::string>> library_sources;
    std::string profile_name = "cpp-thesis";
    AnalysisOptions options;
};

// Full single-project result: the investment report plus the inputs a
// corpus row or a re-plot needs.
struct ProjectAnalysis {
    std::string project;
    InvestmentReport report;
    TokenCensus program_census;
    TokenCensus used_census;  // merged censuses of used components (pooled view)
    std::vector<LibraryComponent> components;
    std::uint64_t loc_program = 0;
    std::uint64_t loc_reused = 0;
    std::vector<std::pair<std::string, std::uint64_t>> per_file_cc;
    std::vector<std::string> warnings;
};

struct CorpusRow {
    std::string project;
    bool failed = false;
    std::string error;  // set when failed
    ProjectAnalysis analysis;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;  // sorted by project name
    std::string profile;
    VrMode vr_mode = VrMode::Pooled;
    double log_base = 10.0;
    int decimals = 2;
    std::string tool_version;
    std::string timestamp;  // empty unless explicitly supplied (keeps output deterministic)
};

// Loads a project manifest: a versioned key/value text file naming the
// project, program/library directories, profile and options. Files are
// gathered by the profile's extensions in lexicographic path order.
// Throws ProjectError on missing dirs, empty program sets, duplicates.
ProjectBundle load_project(const std::string& manifest_path);

// Builds a bundle directly from directories (the CLI `analyze` path).
ProjectBundle load_project_dirs(const std::string& name,
                                const std::vector<std::string>& program_dirs,
                                const std::vector<std::string>& library_dirs,
                                const std::string& profile_name, const AnalysisOptions& options);

// Non-blank, non-comment-only physical lines over a set of sources.
std::uint64_t count_loc_total(const std::vector<std::pair<std::string, std::string>>& sources,
                              const LanguageProfile& profile);

// Runs the full pipeline on one bundle:
// tokenize -> classify -> extract_components -> detect_usage ->
// model_params -> metrics, plus RP from line counts and per-file
// decision-point CC. Deterministic for identical bundle contents.
ProjectAnalysis analyze(const ProjectBundle& bundle);

// Analyzes every manifest; one row per project, failures recorded as
// row-level errors without aborting the corpus. Rows sort by project
// name. Throws ProjectError only when every project failed.
CorpusReport run_corpus(const std::vector<std::string>& manifest_paths,
                        const std::optional<AnalysisOptions>& shared_options = {});

CorpusReport corpus_from_analyses(std::vector<CorpusRow> rows, const std::string& profile,
                                  const AnalysisOptions& options);

// --- emission ------------------------------------------------------------

enum class ReportFormat {
    Json,  // full precision + metadata
    Csv,   // display-rounded delimited table with a header row
};

// Renders a corpus report. Byte-deterministic for identical inputs and
// tool version; the timestamp only appears when set on the report.
// CSV display values are truncated (not rounded half-up) to `decimals`
// digits, the print style classic metric tables use.
std::string render_report(const CorpusReport& report, ReportFormat format);

// Renders a single project as a one-row corpus.
std::string render_report(const ProjectAnalysis& analysis, const AnalysisOptions& options,
                          const std::string& profile, ReportFormat format);

// Writes `content` to `destination` ("-" = stdout). Throws ProjectError
// when the destination is unwritable.
void write_report(const std::string& content, const std::string& destination);

extern const char* const kToolVersion;

}  // namespace libinvest
