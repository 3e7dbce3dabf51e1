#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "libinvest/linkage.hpp"
#include "libinvest/token.hpp"

namespace libinvest {

// The three investment metrics plus comparison figures for one project.
struct InvestmentReport {
    VolumeTriple triple;
    double lir = 0.0;  // Vr / Vnr
    double lil = 0.0;  // Vr / Vorg
    double ps = 0.0;   // 1 - Vorg / Vnr
    std::optional<double> rp;       // RSI / (RSI + SSI)
    std::optional<std::uint64_t> cc;  // worst per-file decision-point CC
};

struct ReuseLevelResult {
    double internal = 0.0;
    double external = 0.0;
    double total = 0.0;  // internal + external, exact by construction
};

// Line-count and component-count inputs for the comparison metrics.
// validate() enforces the bounds; the accessors below it evaluate the
// corresponding metrics on the stored figures.
struct ReuseFigures {
    std::uint64_t rsi = 0;
    std::uint64_t ssi = 0;
    std::optional<std::uint64_t> fresh;  // CSI, for the release variant
    std::uint64_t iu = 0, eu = 0, t = 0;
    std::uint64_t itl = 1, etl = 1;
    std::uint64_t iuf = 0, euf = 0, tf = 0;
    std::uint64_t total_loc = 0;

    void validate() const;
    double rp() const;
    double rp_release() const;  // requires fresh
    ReuseLevelResult level() const;
    ReuseLevelResult frequency() const;
    ReuseLevelResult density() const;
};

// Control graph counts for the graph form of cyclomatic complexity.
struct ControlCounts {
    std::uint64_t edges = 0;
    std::uint64_t nodes = 0;
    std::uint64_t components = 1;
};

// --- investment metrics ------------------------------------------------

// Vr / Vnr, in [0, 1). Throws UndefinedMetricError when v_nr == 0.
double lir(const VolumeTriple& triple);

// Vr / Vorg, >= 0 and unbounded above. Throws when v_org == 0.
double lil(const VolumeTriple& triple);

// 1 - Vorg / Vnr; algebraically equal to LIR since Vnr = Vorg + Vr.
// Throws when v_nr == 0.
double ps(const VolumeTriple& triple);

InvestmentReport investment_report(const VolumeTriple& triple);

// --- comparison metrics -------------------------------------------------

// RSI / (RSI + SSI). Throws when rsi + ssi == 0.
double reuse_percent(std::uint64_t rsi, std::uint64_t ssi);

// Release variant: RSI / (RSI + CSI).
double reuse_percent_release(std::uint64_t rsi, std::uint64_t csi);

// (iu/t, eu/t, (iu+eu)/t). Requires t > 0 and iu + eu <= t.
ReuseLevelResult reuse_level(std::uint64_t iu, std::uint64_t eu, std::uint64_t t);

// (iuf/tf, euf/tf, (iuf+euf)/tf). Requires tf > 0.
ReuseLevelResult reuse_frequency(std::uint64_t iuf, std::uint64_t euf, std::uint64_t tf);

// (iu/total_loc, eu/total_loc, sum). Requires total_loc > 0.
ReuseLevelResult reuse_density(std::uint64_t iu, std::uint64_t eu, std::uint64_t total_loc);

// --- cyclomatic complexity ----------------------------------------------

// e - n + 2p. Throws InvalidGraphError when counts are inconsistent or
// the result would be < 1.
std::uint64_t cc_from_graph(const ControlCounts& counts);

// Decision points + 1 over a token stream: occurrences of the profile's
// decision keywords (if/while/for/case...). `else` alone is not a
// decision point; `else if` counts through its `if`.
std::uint64_t cc_from_decisions(std::span<const Token> tokens, const LanguageProfile& profile);

// True iff cc < 10 (the classic testability recommendation).
bool threshold_flag(std::uint64_t cc);

}  // namespace libinvest
