#include "libinvest/census.hpp"

#include <cmath>
#include <set>

#include "libinvest/error.hpp"
#include "libinvest/profile.hpp"

namespace libinvest {

namespace {

double log_in_base(double x, double base) { return std::log(x) / std::log(base); }

// n log(n) with the 0 * log(0) = 0 convention.
double n_log_n(double n, double base) { return n <= 0.0 ? 0.0 : n * log_in_base(n, base); }

}  // namespace

std::uint64_t TokenCensus::big_n1() const {
    std::uint64_t total = 0;
    for (const auto& [lexeme, freq] : operators) total += freq;
    return total;
}

std::uint64_t TokenCensus::big_n2() const {
    std::uint64_t total = 0;
    for (const auto& [lexeme, freq] : operands) total += freq;
    return total;
}

void TokenCensus::add(const Token& token) {
    if (token.kind == TokenKind::Operator)
        ++operators[token.lexeme];
    else
        ++operands[token.lexeme];
}

TokenCensus classify(std::span<const Token> tokens) {
    TokenCensus census;
    for (const Token& token : tokens) census.add(token);
    return census;
}

TokenCensus merge(const TokenCensus& a, const TokenCensus& b) {
    TokenCensus out = a;
    for (const auto& [lexeme, freq] : b.operators) out.operators[lexeme] += freq;
    for (const auto& [lexeme, freq] : b.operands) out.operands[lexeme] += freq;
    if (a.n_star != b.n_star) out.n_star.reset();
    return out;
}

double volume(const TokenCensus& census, double log_base) {
    std::uint64_t n = census.vocabulary();
    if (n <= 1) return 0.0;
    return static_cast<double>(census.length()) * log_in_base(static_cast<double>(n), log_base);
}

HalsteadReport halstead(const TokenCensus& census, double log_base) {
    if (log_base <= 1.0) throw Error("halstead: log base must be > 1");

    HalsteadReport report;
    report.log_base = log_base;
    report.voc = static_cast<double>(census.vocabulary());
    report.len = n_log_n(static_cast<double>(census.n1()), log_base) +
                 n_log_n(static_cast<double>(census.n2()), log_base);
    report.volume = volume(census, log_base);

    if (census.n_star) {
        double base_terms = 2.0 + static_cast<double>(*census.n_star);
        report.potential_volume = n_log_n(base_terms, log_base);
        if (report.volume > 0.0) {
            report.level = *report.potential_volume / report.volume;
            report.difficulty = report.volume / *report.potential_volume;
            report.effort = report.volume / *report.level;
        } else {
            report.ratios_defined = false;  // division impossible, flagged
        }
    }
    return report;
}

std::uint64_t detect_n_star(std::span<const Token> tokens, const LanguageProfile& profile) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].kind != TokenKind::Operator || !profile.io_markers.count(tokens[i].lexeme))
            continue;
        if (i > 0 && tokens[i - 1].kind == TokenKind::Operand) seen.insert(tokens[i - 1].lexeme);
        if (i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::Operand)
            seen.insert(tokens[i + 1].lexeme);
    }
    return seen.size();
}

}  // namespace libinvest
