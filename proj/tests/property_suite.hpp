#pragma once

// Randomized invariant suite shared by the unit tests and the acceptance
// runner. Every generator is seeded, so failures reproduce exactly.

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "libinvest/corpus.hpp"
#include "libinvest/metrics.hpp"

namespace propsuite {

using namespace libinvest;

struct Outcome {
    int cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline void expect(Outcome& out, bool ok, const std::string& what) {
    if (!ok) out.failures.push_back(what);
}

inline double rel_diff(double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

inline const LanguageProfile& profile() {
    static LanguageProfile p = load_profile("cpp-thesis");
    return p;
}

// --- generators ------------------------------------------------------------

inline TokenCensus random_census(std::mt19937& rng, int max_distinct = 8) {
    std::uniform_int_distribution<int> distinct(0, max_distinct);
    std::uniform_int_distribution<int> freq(1, 5);
    static const char* op_pool[] = {";", "=", "+", "-", "()", "{}", "<<", "int", "return", "if"};
    static const char* od_pool[] = {"a", "b", "c", "x", "y", "count", "total", "0", "1", "42"};
    TokenCensus census;
    int n_ops = distinct(rng), n_ods = distinct(rng);
    for (int i = 0; i < n_ops; ++i) census.operators[op_pool[i % 10]] += freq(rng);
    for (int i = 0; i < n_ods; ++i) census.operands[od_pool[i % 10]] += freq(rng);
    return census;
}

inline TokenStream random_token_list(std::mt19937& rng, int max_len = 50) {
    static const char* op_pool[] = {";", "=", "+", "()", "int"};
    static const char* od_pool[] = {"a", "b", "x", "1", "42"};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> kind(0, 1);
    TokenStream tokens;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        Token t;
        if (kind(rng) == 0) {
            t.kind = TokenKind::Operator;
            t.lexeme = op_pool[pick(rng)];
        } else {
            t.kind = TokenKind::Operand;
            t.lexeme = od_pool[pick(rng)];
        }
        t.line = static_cast<std::size_t>(i + 1);
        t.column = 1;
        tokens.push_back(std::move(t));
    }
    return tokens;
}

// Standalone statement fragments: balanced, comment-free unless stated.
inline std::string random_fragment(std::mt19937& rng) {
    static const char* names[] = {"alpha", "beta", "gamma", "delta", "omega"};
    std::uniform_int_distribution<int> pick_name(0, 4);
    std::uniform_int_distribution<int> pick_num(0, 99);
    std::uniform_int_distribution<int> pick_form(0, 6);
    const char* a = names[pick_name(rng)];
    const char* b = names[pick_name(rng)];
    int n = pick_num(rng);
    std::ostringstream out;
    switch (pick_form(rng)) {
        case 0: out << "int " << a << " = " << n << ";"; break;
        case 1: out << a << " = " << b << " + " << n << ";"; break;
        case 2: out << "if (" << a << " < " << n << ") { " << b << " = 0; }"; break;
        case 3: out << "while (" << a << ") { " << b << " = " << b << " - 1; }"; break;
        case 4: out << a << ".update(" << n << ");"; break;
        case 5: out << "str = \"lit " << n << "\";"; break;
        case 6: out << "for (int i = 0; i < " << n << "; i++) " << a << " = i;"; break;
    }
    return out.str();
}

inline std::string random_program(std::mt19937& rng, int max_statements = 6) {
    std::uniform_int_distribution<int> count(0, max_statements);
    std::string out;
    int n = count(rng);
    for (int i = 0; i < n; ++i) out += random_fragment(rng) + "\n";
    return out;
}

inline std::vector<LibraryComponent> random_components(std::mt19937& rng, int max_count = 4) {
    std::uniform_int_distribution<int> count(1, max_count);
    int n = count(rng);
    std::vector<LibraryComponent> comps;
    for (int i = 0; i < n; ++i) {
        LibraryComponent c;
        c.name = "comp" + std::to_string(i);
        c.owner = "Lib";
        c.census = random_census(rng);
        if (c.census.empty()) c.census.operands["filler"] = 1;
        c.v_ci = volume(c.census, 10.0);
        c.f_ci = 1;
        comps.push_back(std::move(c));
    }
    return comps;
}

// --- properties ------------------------------------------------------------

inline void metric_identities(std::mt19937& rng, int cases, Outcome& out) {
    std::uniform_real_distribution<double> v_org_dist(0.1, 1000.0);
    std::uniform_real_distribution<double> v_r_dist(0.0, 1000.0);
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        VolumeTriple t;
        t.v_org = v_org_dist(rng);
        t.v_r = v_r_dist(rng);
        t.v_nr = t.v_org + t.v_r;
        double l = lir(t), p = ps(t), il = lil(t);
        expect(out, std::fabs(p - l) <= 1e-12, "PS != LIR");
        expect(out, std::fabs(l - il / (1.0 + il)) <= 1e-12, "LIR != LIL/(1+LIL)");
        expect(out, l >= 0.0 && l < 1.0, "LIR out of [0,1)");
        expect(out, il >= 0.0, "LIL negative");

        VolumeTriple grown = t;
        grown.v_r += 1.0 + v_r_dist(rng) / 10.0;
        grown.v_nr = grown.v_org + grown.v_r;
        expect(out, lir(grown) > l, "LIR not monotone in Vr");
        expect(out, lil(grown) > il, "LIL not monotone in Vr");
        expect(out, ps(grown) > p, "PS not monotone in Vr");
    }
}

inline void merge_laws(std::mt19937& rng, int cases, Outcome& out) {
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        TokenCensus a = random_census(rng), b = random_census(rng), c = random_census(rng);
        expect(out, merge(a, b) == merge(b, a), "merge not commutative");
        expect(out, merge(merge(a, b), c) == merge(a, merge(b, c)), "merge not associative");
        expect(out, merge(a, TokenCensus{}) == a, "zero census not identity");
    }
}

inline void classify_laws(std::mt19937& rng, int cases, Outcome& out) {
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        TokenStream a = random_token_list(rng), b = random_token_list(rng);
        TokenStream ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        expect(out, classify(ab) == merge(classify(a), classify(b)),
               "classify(a++b) != merge(classify(a), classify(b))");

        TokenStream shuffled = ab;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        expect(out, classify(shuffled) == classify(ab), "classify order-sensitive");
    }
}

// classify and volume against independent oracles (brute-force tally,
// direct N*log10(n) arithmetic).
inline void census_oracles(std::mt19937& rng, int cases, Outcome& out) {
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        TokenStream tokens = random_token_list(rng, 50);

        std::vector<std::pair<std::string, std::uint64_t>> op_tally, od_tally;
        auto bump = [](std::vector<std::pair<std::string, std::uint64_t>>& tally,
                       const std::string& lexeme) {
            for (auto& [k, v] : tally)
                if (k == lexeme) { ++v; return; }
            tally.emplace_back(lexeme, 1);
        };
        for (const auto& t : tokens)
            bump(t.kind == TokenKind::Operator ? op_tally : od_tally, t.lexeme);

        TokenCensus census = classify(tokens);
        bool same = census.n1() == op_tally.size() && census.n2() == od_tally.size();
        std::uint64_t total_ops = 0, total_ods = 0;
        for (auto& [k, v] : op_tally) {
            total_ops += v;
            auto it = census.operators.find(k);
            same = same && it != census.operators.end() && it->second == v;
        }
        for (auto& [k, v] : od_tally) {
            total_ods += v;
            auto it = census.operands.find(k);
            same = same && it != census.operands.end() && it->second == v;
        }
        same = same && census.big_n1() == total_ops && census.big_n2() == total_ods;
        expect(out, same, "classify disagrees with brute-force tally");

        double n = static_cast<double>(op_tally.size() + od_tally.size());
        double big_n = static_cast<double>(total_ops + total_ods);
        double oracle = n <= 1.0 ? 0.0 : big_n * std::log10(n);
        expect(out, rel_diff(volume(census, 10.0), oracle) <= 1e-12,
               "volume disagrees with N*log10(n)");
    }
}

inline void volume_monotone(std::mt19937& rng, int cases, Outcome& out) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        TokenCensus census = random_census(rng);
        double before = volume(census, 10.0);
        TokenCensus grown = census;
        if (coin(rng) == 0 && !grown.operands.empty())
            ++grown.operands.begin()->second;
        else
            ++grown.operands["fresh_lexeme"];
        expect(out, volume(grown, 10.0) >= before, "volume decreased when adding a token");
    }
}

inline void pooled_vs_summed(std::mt19937& rng, int cases, Outcome& out) {
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        auto comps = random_components(rng);
        TokenCensus program = random_census(rng);
        program.operands["main"] += 1;
        VolumeTriple pooled = model_params(program, comps, VrMode::Pooled, 10.0);
        VolumeTriple summed = model_params(program, comps, VrMode::Summed, 10.0);
        expect(out, pooled.v_r + 1e-9 >= summed.v_r, "pooled Vr < summed Vr at f=1");
        expect(out, pooled.v_nr >= pooled.v_org, "Vnr < Vorg");
        expect(out, summed.v_nr >= summed.v_org, "Vnr < Vorg (summed)");
    }
}

inline void base_invariance(std::mt19937& rng, int cases, Outcome& out) {
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        auto comps = random_components(rng);
        TokenCensus program = random_census(rng);
        program.operands["main"] += 1;
        program.operators[";"] += 2;
        for (VrMode mode : {VrMode::Pooled, VrMode::Summed}) {
            VolumeTriple t10 = model_params(program, comps, mode, 10.0);
            VolumeTriple t2 = model_params(program, comps, mode, 2.0);
            if (t10.v_nr <= 0.0 || t2.v_nr <= 0.0) continue;
            expect(out, rel_diff(lir(t10), lir(t2)) <= 1e-9, "LIR base-dependent");
            expect(out, t10.v_org <= 0 || rel_diff(lil(t10), lil(t2)) <= 1e-9,
                   "LIL base-dependent");
            expect(out, rel_diff(ps(t10), ps(t2)) <= 1e-9, "PS base-dependent");
        }
    }
}

inline void tokenizer_laws(std::mt19937& rng, int cases, Outcome& out) {
    auto same_stream = [](const TokenStream& a, const TokenStream& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].lexeme != b[i].lexeme || a[i].kind != b[i].kind) return false;
        return true;
    };
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        std::string a = random_program(rng), b = random_program(rng);
        expect(out, same_stream(tokenize(a, profile()), tokenize(a, profile())),
               "tokenize not deterministic");

        TokenStream joined = tokenize(a + "\n" + b, profile());
        TokenStream parts = tokenize(a, profile());
        TokenStream tail = tokenize(b, profile());
        parts.insert(parts.end(), tail.begin(), tail.end());
        expect(out, same_stream(joined, parts), "tokenize concatenation law failed");

        std::string commented = a + "// trailing comment\n/* block */\n";
        expect(out, same_stream(tokenize(commented, profile()), tokenize(a, profile())),
               "comment erasure failed");
    }
}

inline void usage_monotone(std::mt19937& rng, int cases, Outcome& out) {
    const char* lib =
        "int helper() { return 1; }\n"
        "void Gadget::update(int v) { state = v; }\n"
        "int Gadget::read() { return state; }\n";
    auto comps = extract_components({{"gadget.h", lib}}, profile(), 10.0);
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        std::string base = random_program(rng);
        std::string more = base + random_fragment(rng) + "\n" + "x = helper();\n";
        auto f_base = detect_usage(tokenize(base, profile()), comps, profile());
        auto f_more = detect_usage(tokenize(more, profile()), comps, profile());
        bool monotone = true;
        for (std::size_t k = 0; k < comps.size(); ++k)
            monotone = monotone && f_more[k].f_ci >= f_base[k].f_ci;
        expect(out, monotone, "usage not monotone under appended statements");
    }
}

inline void reuse_percent_complement(std::mt19937& rng, int cases, Outcome& out) {
    std::uniform_int_distribution<std::uint64_t> loc(1, 100000);
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        std::uint64_t r = loc(rng), s = loc(rng);
        double sum = reuse_percent(r, s) + reuse_percent(s, r);
        expect(out, std::fabs(sum - 1.0) <= 1e-15, "RP complements do not sum to 1");
    }
}

inline Outcome run_all(unsigned seed, int scale) {
    std::mt19937 rng(seed);
    Outcome out;
    metric_identities(rng, 3 * scale, out);
    merge_laws(rng, scale, out);
    classify_laws(rng, scale, out);
    census_oracles(rng, scale, out);
    volume_monotone(rng, scale, out);
    pooled_vs_summed(rng, scale, out);
    base_invariance(rng, scale, out);
    tokenizer_laws(rng, scale / 2, out);
    usage_monotone(rng, scale / 4, out);
    reuse_percent_complement(rng, scale, out);
    return out;
}

}  // namespace propsuite
