#include "libinvest/metrics.hpp"

#include "libinvest/error.hpp"
#include "libinvest/profile.hpp"

namespace libinvest {

double lir(const VolumeTriple& triple) {
    if (triple.v_nr <= 0.0) throw UndefinedMetricError("LIR", "Vnr");
    return triple.v_r / triple.v_nr;
}

double lil(const VolumeTriple& triple) {
    if (triple.v_org <= 0.0) throw UndefinedMetricError("LIL", "Vorg");
    return triple.v_r / triple.v_org;
}

double ps(const VolumeTriple& triple) {
    if (triple.v_nr <= 0.0) throw UndefinedMetricError("PS", "Vnr");
    return 1.0 - triple.v_org / triple.v_nr;
}

InvestmentReport investment_report(const VolumeTriple& triple) {
    InvestmentReport report;
    report.triple = triple;
    report.lir = lir(triple);
    report.lil = lil(triple);
    report.ps = ps(triple);
    return report;
}

double reuse_percent(std::uint64_t rsi, std::uint64_t ssi) {
    if (rsi + ssi == 0) throw UndefinedMetricError("RP", "RSI+SSI");
    return static_cast<double>(rsi) / static_cast<double>(rsi + ssi);
}

double reuse_percent_release(std::uint64_t rsi, std::uint64_t csi) {
    if (rsi + csi == 0) throw UndefinedMetricError("RP-release", "RSI+CSI");
    return static_cast<double>(rsi) / static_cast<double>(rsi + csi);
}

ReuseLevelResult reuse_level(std::uint64_t iu, std::uint64_t eu, std::uint64_t t) {
    if (t == 0) throw UndefinedMetricError("reuse level", "T");
    if (iu + eu > t) throw Error("reuse_level: IU + EU exceeds T");
    ReuseLevelResult r;
    r.internal = static_cast<double>(iu) / static_cast<double>(t);
    r.external = static_cast<double>(eu) / static_cast<double>(t);
    r.total = r.internal + r.external;
    return r;
}

ReuseLevelResult reuse_frequency(std::uint64_t iuf, std::uint64_t euf, std::uint64_t tf) {
    if (tf == 0) throw UndefinedMetricError("reuse frequency", "TF");
    ReuseLevelResult r;
    r.internal = static_cast<double>(iuf) / static_cast<double>(tf);
    r.external = static_cast<double>(euf) / static_cast<double>(tf);
    r.total = r.internal + r.external;
    return r;
}

ReuseLevelResult reuse_density(std::uint64_t iu, std::uint64_t eu, std::uint64_t total_loc) {
    if (total_loc == 0) throw UndefinedMetricError("reuse density", "LOC");
    ReuseLevelResult r;
    r.internal = static_cast<double>(iu) / static_cast<double>(total_loc);
    r.external = static_cast<double>(eu) / static_cast<double>(total_loc);
    r.total = r.internal + r.external;
    return r;
}

void ReuseFigures::validate() const {
    if (ssi == 0) throw Error("reuse figures: SSI must be positive");
    if (t < iu + eu) throw Error("reuse figures: T < IU + EU");
    if (tf < iuf + euf) throw Error("reuse figures: TF < IUF + EUF");
    if (itl == 0 || etl == 0) throw Error("reuse figures: thresholds must be positive");
    if (total_loc == 0) throw Error("reuse figures: total LOC must be positive");
}

double ReuseFigures::rp() const { return reuse_percent(rsi, ssi); }

double ReuseFigures::rp_release() const {
    if (!fresh) throw Error("reuse figures: release variant needs CSI");
    return reuse_percent_release(rsi, *fresh);
}

ReuseLevelResult ReuseFigures::level() const { return reuse_level(iu, eu, t); }
ReuseLevelResult ReuseFigures::frequency() const { return reuse_frequency(iuf, euf, tf); }
ReuseLevelResult ReuseFigures::density() const { return reuse_density(iu, eu, total_loc); }

std::uint64_t cc_from_graph(const ControlCounts& counts) {
    if (counts.nodes == 0) throw InvalidGraphError("control graph has no nodes");
    if (counts.components == 0) throw InvalidGraphError("control graph has no components");
    if (counts.edges + counts.components < counts.nodes)
        throw InvalidGraphError("control graph disconnected beyond its component count");
    long long cc = static_cast<long long>(counts.edges) - static_cast<long long>(counts.nodes) +
                   2LL * static_cast<long long>(counts.components);
    if (cc < 1) throw InvalidGraphError("cyclomatic complexity below 1");
    return static_cast<std::uint64_t>(cc);
}

std::uint64_t cc_from_decisions(std::span<const Token> tokens, const LanguageProfile& profile) {
    std::uint64_t decisions = 0;
    for (const Token& t : tokens)
        if (t.kind == TokenKind::Operator && profile.decision_keywords.count(t.lexeme))
            ++decisions;
    return decisions + 1;
}

bool threshold_flag(std::uint64_t cc) { return cc < 10; }

}  // namespace libinvest
