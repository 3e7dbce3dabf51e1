#include "libinvest/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "libinvest/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace libinvest {

const char* const kToolVersion = "0.1.0";

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProjectError("unreadable file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (!is_valid_text(text)) throw ProjectError("undecodable file (not UTF-8): " + path.string());
    return text;
}

bool has_extension(const fs::path& path, const LanguageProfile& profile) {
    std::string ext = path.extension().string();
    return std::find(profile.source_extensions.begin(), profile.source_extensions.end(), ext) !=
           profile.source_extensions.end();
}

std::vector<std::pair<std::string, std::string>> gather_sources(
    const std::vector<std::string>& dirs, const LanguageProfile& profile, const char* role) {
    std::set<std::string> seen_dirs;
    std::vector<std::pair<std::string, std::string>> sources;
    std::set<std::string> seen_paths;
    for (const auto& dir : dirs) {
        if (!seen_dirs.insert(fs::path(dir).lexically_normal().string()).second)
            throw ProjectError(std::string(role) + " directory listed twice: " + dir);
        if (!fs::is_directory(dir))
            throw ProjectError("missing " + std::string(role) + " directory: " + dir);
        for (const auto& entry : fs::recursive_directory_iterator(dir)) {
            if (!entry.is_regular_file() || !has_extension(entry.path(), profile)) continue;
            std::string path = entry.path().generic_string();
            if (!seen_paths.insert(path).second)
                throw ProjectError("duplicate source path: " + path);
            sources.emplace_back(path, read_file(entry.path()));
        }
    }
    std::sort(sources.begin(), sources.end());
    return sources;
}

VrMode parse_vr_mode(const std::string& value) {
    if (value == "pooled") return VrMode::Pooled;
    if (value == "summed") return VrMode::Summed;
    throw ProjectError("vr_mode must be 'pooled' or 'summed', got '" + value + "'");
}

const char* vr_mode_name(VrMode mode) { return mode == VrMode::Pooled ? "pooled" : "summed"; }

// Display truncation toward zero (0.645 prints as 0.64, 0.0043956 as
// 0.0043), the print style classic metric tables use.
std::string display(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    double truncated = std::trunc(value * scale) / scale;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, truncated);
    return buffer;
}

json census_json(const TokenCensus& census) {
    json j;
    j["n1"] = census.n1();
    j["n2"] = census.n2();
    j["N1"] = census.big_n1();
    j["N2"] = census.big_n2();
    if (census.n_star) j["n_star"] = *census.n_star;
    return j;
}

}  // namespace

std::uint64_t count_loc_total(const std::vector<std::pair<std::string, std::string>>& sources,
                              const LanguageProfile& profile) {
    std::uint64_t total = 0;
    for (const auto& [path, text] : sources) total += count_loc(text, profile);
    return total;
}

ProjectBundle load_project_dirs(const std::string& name,
                                const std::vector<std::string>& program_dirs,
                                const std::vector<std::string>& library_dirs,
                                const std::string& profile_name, const AnalysisOptions& options) {
    LanguageProfile profile = load_profile(profile_name);
    ProjectBundle bundle;
    bundle.name = name;
    bundle.profile_name = profile_name;
    bundle.options = options;
    bundle.program_sources = gather_sources(program_dirs, profile, "program");
    bundle.library_sources = gather_sources(library_dirs, profile, "library");
    if (bundle.program_sources.empty()) throw ProjectError("no program sources in " + name);
    return bundle;
}

ProjectBundle load_project(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw ProjectError("unreadable manifest: " + manifest_path);

    std::string name;
    std::string profile_name = "cpp-thesis";
    AnalysisOptions options;
    std::vector<std::string> program_dirs;
    std::vector<std::string> library_dirs;
    bool saw_version = false;

    fs::path base_dir = fs::path(manifest_path).parent_path();
    auto resolve = [&](const std::string& dir) {
        fs::path p(dir);
        return p.is_absolute() ? p.string() : (base_dir / p).string();
    };

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = raw.find_last_not_of(" \t\r");
        std::string line = raw.substr(first, last - first + 1);
        if (line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ProjectError("manifest " + manifest_path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "manifest_version") saw_version = true;
        else if (key == "project") name = value;
        else if (key == "program_dir") program_dirs.push_back(resolve(value));
        else if (key == "library_dir") library_dirs.push_back(resolve(value));
        else if (key == "profile") profile_name = value;
        else if (key == "vr_mode") options.vr_mode = parse_vr_mode(value);
        else if (key == "log_base") options.log_base = std::stod(value);
        else if (key == "n_star") options.n_star = std::stoull(value);
        else if (key == "decimals") options.decimals = std::stoi(value);
        else
            throw ProjectError("manifest " + manifest_path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
    if (!saw_version) throw ProjectError("manifest " + manifest_path + ": missing manifest_version");
    if (name.empty()) throw ProjectError("manifest " + manifest_path + ": missing project name");
    if (options.log_base <= 1.0)
        throw ProjectError("manifest " + manifest_path + ": log_base must be > 1");

    return load_project_dirs(name, program_dirs, library_dirs, profile_name, options);
}

ProjectAnalysis analyze(const ProjectBundle& bundle) {
    if (bundle.program_sources.empty())
        throw ProjectError("no program sources in " + bundle.name);
    LanguageProfile profile = load_profile(bundle.profile_name);

    auto program_sources = bundle.program_sources;
    std::sort(program_sources.begin(), program_sources.end());
    auto library_sources = bundle.library_sources;
    std::sort(library_sources.begin(), library_sources.end());

    ProjectAnalysis out;
    out.project = bundle.name;

    // lexical pass: full streams for usage/CC, reduced streams for the census
    std::vector<TokenStream> full_streams;
    TokenCensus program_census;
    for (const auto& [path, text] : program_sources) {
        TokenStream full = tokenize(text, profile, path);
        TokenStream reduced = census_stream(full, profile, CensusRole::Program);
        program_census = merge(program_census, classify(reduced));
        out.per_file_cc.emplace_back(path, cc_from_decisions(full, profile));
        full_streams.push_back(std::move(full));
    }
    program_census.n_star = bundle.options.n_star;

    out.components = extract_components(library_sources, profile, bundle.options.log_base);
    std::vector<std::uint64_t> totals(out.components.size(), 0);
    for (const auto& stream : full_streams) {
        auto counted = detect_usage(stream, out.components, profile, &out.warnings);
        for (std::size_t k = 0; k < counted.size(); ++k) totals[k] += counted[k].f_ci;
    }
    for (std::size_t k = 0; k < out.components.size(); ++k) out.components[k].f_ci = totals[k];

    VolumeTriple triple = model_params(program_census, out.components, bundle.options.vr_mode,
                                       bundle.options.log_base);
    out.report = investment_report(triple);
    out.program_census = program_census;
    for (const auto& c : out.components)
        if (c.f_ci >= 1) out.used_census = merge(out.used_census, c.census);

    out.loc_program = count_loc_total(program_sources, profile);
    for (const auto& c : out.components)
        if (c.f_ci >= 1) out.loc_reused += c.body_loc;
    if (out.loc_reused + out.loc_program > 0)
        out.report.rp = reuse_percent(out.loc_reused, out.loc_program);

    std::uint64_t worst_cc = 0;
    for (const auto& [path, cc] : out.per_file_cc) worst_cc = std::max(worst_cc, cc);
    if (worst_cc > 0) out.report.cc = worst_cc;

    return out;
}

CorpusReport corpus_from_analyses(std::vector<CorpusRow> rows, const std::string& profile,
                                  const AnalysisOptions& options) {
    std::sort(rows.begin(), rows.end(),
              [](const CorpusRow& a, const CorpusRow& b) { return a.project < b.project; });
    CorpusReport report;
    report.rows = std::move(rows);
    report.profile = profile;
    report.vr_mode = options.vr_mode;
    report.log_base = options.log_base;
    report.decimals = options.decimals;
    report.tool_version = kToolVersion;
    return report;
}

CorpusReport run_corpus(const std::vector<std::string>& manifest_paths,
                        const std::optional<AnalysisOptions>& shared_options) {
    if (manifest_paths.empty()) throw ProjectError("corpus needs at least one manifest");

    std::vector<CorpusRow> rows;
    std::set<std::string> profiles;
    AnalysisOptions options = shared_options.value_or(AnalysisOptions{});
    bool options_captured = shared_options.has_value();
    std::size_t failures = 0;

    for (const auto& path : manifest_paths) {
        CorpusRow row;
        try {
            ProjectBundle bundle = load_project(path);
            if (shared_options) bundle.options = *shared_options;
            row.project = bundle.name;
            row.analysis = analyze(bundle);
            profiles.insert(bundle.profile_name);
            if (!options_captured) {
                options = bundle.options;
                options_captured = true;
            }
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
            if (row.project.empty()) row.project = path;
            ++failures;
        }
        rows.push_back(std::move(row));
    }
    if (failures == manifest_paths.size())
        throw ProjectError("all " + std::to_string(failures) + " projects failed");

    std::string profile = profiles.size() == 1 ? *profiles.begin() : "mixed";
    return corpus_from_analyses(std::move(rows), profile, options);
}

namespace {

json row_json(const CorpusRow& row) {
    json j;
    j["project"] = row.project;
    if (row.failed) {
        j["error"] = row.error;
        return j;
    }
    const ProjectAnalysis& a = row.analysis;
    j["loc_program"] = a.loc_program;
    j["loc_reused"] = a.loc_reused;
    j["v_org"] = a.report.triple.v_org;
    j["v_r"] = a.report.triple.v_r;
    j["v_nr"] = a.report.triple.v_nr;
    j["lir"] = a.report.lir;
    j["lil"] = a.report.lil;
    j["ps"] = a.report.ps;
    if (a.report.rp) j["rp"] = *a.report.rp;
    if (a.report.cc) j["cc"] = *a.report.cc;
    j["program_census"] = census_json(a.program_census);
    j["used_census"] = census_json(a.used_census);
    json comps = json::array();
    for (const auto& c : a.components) {
        json cj;
        cj["name"] = c.name;
        cj["owner"] = c.owner;
        cj["v_ci"] = c.v_ci;
        cj["f_ci"] = c.f_ci;
        cj["body_loc"] = c.body_loc;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    json ccs = json::object();
    for (const auto& [path, cc] : a.per_file_cc) ccs[path] = cc;
    j["per_file_cc"] = std::move(ccs);
    if (!a.warnings.empty()) j["warnings"] = a.warnings;
    return j;
}

std::string render_csv(const CorpusReport& report) {
    std::ostringstream out;
    out << "project,loc_program,loc_reused,v_org,v_r,v_nr,lir,lil,ps,rp,cc\n";
    for (const auto& row : report.rows) {
        if (row.failed) {
            out << row.project << ",error,\"" << row.error << "\"\n";
            continue;
        }
        const ProjectAnalysis& a = row.analysis;
        int d = report.decimals;
        out << row.project << ',' << a.loc_program << ',' << a.loc_reused << ','
            << display(a.report.triple.v_org, d) << ',' << display(a.report.triple.v_r, d) << ','
            << display(a.report.triple.v_nr, d) << ',' << display(a.report.lir, d) << ','
            << display(a.report.lil, d) << ',' << display(a.report.ps, d) << ','
            << (a.report.rp ? display(*a.report.rp, d) : std::string()) << ','
            << (a.report.cc ? std::to_string(*a.report.cc) : std::string()) << '\n';
    }
    return out.str();
}

std::string render_json(const CorpusReport& report) {
    json j;
    j["schema"] = "libinvest-report-v1";
    j["tool_version"] = report.tool_version;
    j["profile"] = report.profile;
    j["vr_mode"] = vr_mode_name(report.vr_mode);
    j["log_base"] = report.log_base;
    j["decimals"] = report.decimals;
    if (!report.timestamp.empty()) j["timestamp"] = report.timestamp;
    json projects = json::array();
    for (const auto& row : report.rows) projects.push_back(row_json(row));
    j["projects"] = std::move(projects);
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const CorpusReport& report, ReportFormat format) {
    return format == ReportFormat::Csv ? render_csv(report) : render_json(report);
}

std::string render_report(const ProjectAnalysis& analysis, const AnalysisOptions& options,
                          const std::string& profile, ReportFormat format) {
    CorpusRow row;
    row.project = analysis.project;
    row.analysis = analysis;
    return render_report(corpus_from_analyses({std::move(row)}, profile, options), format);
}

void write_report(const std::string& content, const std::string& destination) {
    if (destination.empty() || destination == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw ProjectError("unwritable destination: " + destination);
    out << content;
    if (!out) throw ProjectError("write failed: " + destination);
}

}  // namespace libinvest
