#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "libinvest/token.hpp"

namespace libinvest {

// Operator/operand multisets for a body of code, with the classic
// Halstead counts: n1/n2 distinct, N1/N2 total, and the optional n*
// (input/output parameter count).
struct TokenCensus {
    std::map<std::string, std::uint64_t> operators;
    std::map<std::string, std::uint64_t> operands;
    std::optional<std::uint64_t> n_star;

    std::uint64_t n1() const { return operators.size(); }
    std::uint64_t n2() const { return operands.size(); }
    std::uint64_t big_n1() const;
    std::uint64_t big_n2() const;
    std::uint64_t vocabulary() const { return n1() + n2(); }
    std::uint64_t length() const { return big_n1() + big_n2(); }
    bool empty() const { return operators.empty() && operands.empty(); }

    void add(const Token& token);

    bool operator==(const TokenCensus& other) const {
        return operators == other.operators && operands == other.operands &&
               n_star == other.n_star;
    }
};

// All Halstead metrics for one census. The ratio metrics (level,
// difficulty, effort) and potential volume exist only when n* was
// supplied; `ratios_defined` is false when n* was supplied but the
// volume is zero, making the divisions impossible.
struct HalsteadReport {
    double voc = 0.0;
    double len = 0.0;
    double volume = 0.0;
    std::optional<double> potential_volume;
    std::optional<double> level;
    std::optional<double> difficulty;
    std::optional<double> effort;
    double log_base = 10.0;
    bool ratios_defined = true;
};

// Tallies a token stream into a census. Order-insensitive; empty input
// yields the zero census. n* is left unset.
TokenCensus classify(std::span<const Token> tokens);

// Key-wise sum of two censuses; N-values add exactly, distinct counts
// become union sizes. The zero census is the identity. n* merges only
// when both sides agree (otherwise the result's n* is unset).
TokenCensus merge(const TokenCensus& a, const TokenCensus& b);

// Program volume (N1+N2)*log(n1+n2) in the given base, 0 when the
// vocabulary is empty or a single lexeme.
double volume(const TokenCensus& census, double log_base = 10.0);

// Computes VOC, Len, V and, when n* is set, V*, L, D, E.
// Conventions: 0*log(0) = 0 and volume(n <= 1) = 0, so every metric is a
// total function. log_base must be > 1.
HalsteadReport halstead(const TokenCensus& census, double log_base = 10.0);

// Best-effort n* detection: the number of distinct operands adjacent to
// an io_marker operator in the stream. n* normally arrives by
// annotation; this helper exists for exploratory runs.
std::uint64_t detect_n_star(std::span<const Token> tokens, const class LanguageProfile& profile);

}  // namespace libinvest
