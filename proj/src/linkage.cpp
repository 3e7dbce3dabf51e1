#include "libinvest/linkage.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "libinvest/error.hpp"

namespace libinvest {

namespace {

bool ident_operand(const Token& t, const LanguageProfile& prof) {
    return t.kind == TokenKind::Operand && !t.lexeme.empty() &&
           prof.is_identifier_start(static_cast<unsigned char>(t.lexeme[0]));
}

bool keyword_op(const Token& t, const LanguageProfile& prof) {
    return t.kind == TokenKind::Operator && prof.is_keyword(t.lexeme);
}

// Keywords that can open a declaration head (`int`, `static`, ...),
// as opposed to statement keywords (`return f();` is a call).
bool declaration_keyword(const Token& t, const LanguageProfile& prof) {
    return keyword_op(t, prof) && prof.statement_keywords.count(t.lexeme) == 0;
}

std::string fold_case(const std::string& s, bool insensitive) {
    if (!insensitive) return s;
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct DefinitionHead {
    std::size_t start = 0;       // first token of the definition
    std::size_t name_index = 0;  // component name token
    std::size_t params = 0;      // "()" pair token
    std::size_t body = 0;        // "{}" pair token
    std::string owner;
    bool qualified = false;
    bool constructor_form = false;
    std::size_t qualifier_index = 0;  // Owner token of `Owner ::`, when qualified
};

// Matches a definition at `i`:
//   Owner :: name ( ... ) { ... }          qualified (constructor when name == Owner)
//   kw... name ( ... ) { ... }             free function, keyword return type
//   name ( ... ) { ... }                   constructor inside `class name { ... }`
bool match_definition(const TokenStream& tokens, std::size_t i, const LanguageProfile& prof,
                      const std::string& enclosing_class, DefinitionHead& head) {
    auto body_after = [&](std::size_t params_index) -> std::size_t {
        std::size_t j = tokens[params_index].pair_end;
        while (j < tokens.size() && keyword_op(tokens[j], prof)) ++j;  // trailing const etc.
        if (j < tokens.size() && tokens[j].is_pair() && tokens[j].lexeme == "{}") return j;
        return std::string::npos;
    };

    if (ident_operand(tokens[i], prof) && i + 3 < tokens.size() && tokens[i + 1].is_op("::") &&
        ident_operand(tokens[i + 2], prof) && tokens[i + 3].is_pair() &&
        tokens[i + 3].lexeme == "()") {
        std::size_t body = body_after(i + 3);
        if (body == std::string::npos) return false;
        std::size_t start = i;
        while (start > 0 && keyword_op(tokens[start - 1], prof)) --start;  // return type
        head = {start, i + 2, i + 3, body, tokens[i].lexeme, true,
                tokens[i].lexeme == tokens[i + 2].lexeme};
        head.qualifier_index = i;
        return true;
    }

    if (declaration_keyword(tokens[i], prof)) {
        std::size_t m = i;
        while (m < tokens.size() && keyword_op(tokens[m], prof)) ++m;
        if (m + 1 < tokens.size() && ident_operand(tokens[m], prof) && tokens[m + 1].is_pair() &&
            tokens[m + 1].lexeme == "()") {
            std::size_t body = body_after(m + 1);
            if (body == std::string::npos) return false;
            head = {i, m, m + 1, body, "", false, false};
            return true;
        }
        return false;
    }

    if (!enclosing_class.empty() && ident_operand(tokens[i], prof) &&
        tokens[i].lexeme == enclosing_class && i + 1 < tokens.size() && tokens[i + 1].is_pair() &&
        tokens[i + 1].lexeme == "()") {
        std::size_t body = body_after(i + 1);
        if (body == std::string::npos) return false;
        head = {i, i, i + 1, body, enclosing_class, false, true};
        return true;
    }
    return false;
}

// Builds the tokens a component census tallies. The signature is shaped
// here (qualifier absorbed into the owner, constructors keep both name
// tokens, parameter type keywords dropped); the body runs through the
// generic census reduction; pair lexemes already counted in this file
// are dropped when the profile counts pairs once per file.
TokenStream component_census_tokens(const TokenStream& tokens, const DefinitionHead& head,
                                    const LanguageProfile& prof,
                                    std::set<std::string>& seen_pairs) {
    TokenStream out;

    for (std::size_t j = head.start; j < head.params; ++j) {
        if (head.qualified) {
            if (j == head.qualifier_index + 1) continue;                            // ::
            if (j == head.qualifier_index && !head.constructor_form) continue;      // Owner
        }
        out.push_back(tokens[j]);
    }
    out.push_back(tokens[head.params]);
    for (std::size_t j = head.params + 1; j < tokens[head.params].pair_end; ++j) {
        if (prof.component_absorb_param_type_keywords && keyword_op(tokens[j], prof)) continue;
        out.push_back(tokens[j]);
    }
    for (std::size_t j = tokens[head.params].pair_end; j < head.body; ++j)
        if (tokens[j].kind == TokenKind::Operator && !tokens[j].is_pair())
            out.push_back(tokens[j]);  // trailing modifiers (const)
    out.push_back(tokens[head.body]);

    // body contents, reindexed so the census reduction can skip arg spans
    std::size_t body_begin = head.body + 1;
    TokenStream body(tokens.begin() + static_cast<std::ptrdiff_t>(body_begin),
                     tokens.begin() + static_cast<std::ptrdiff_t>(tokens[head.body].pair_end));
    for (Token& t : body)
        if (t.is_pair()) t.pair_end -= body_begin;
    for (Token& t : census_stream(body, prof, CensusRole::Component)) out.push_back(std::move(t));

    if (prof.component_pairs_once_per_file) {
        TokenStream filtered;
        filtered.reserve(out.size());
        for (Token& t : out) {
            if (t.is_pair() && !seen_pairs.insert(t.lexeme).second) continue;
            filtered.push_back(std::move(t));
        }
        out = std::move(filtered);
    }
    return out;
}

std::size_t body_line_count(const std::string& text, std::size_t first_line,
                            std::size_t last_line, const LanguageProfile& prof) {
    std::size_t line = 1;
    std::size_t begin = std::string::npos;
    std::size_t end = text.size();
    if (first_line == 1) begin = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\n') continue;
        ++line;
        if (line == first_line) begin = i + 1;
        if (line == last_line + 1) { end = i; break; }
    }
    if (begin == std::string::npos) return 0;
    return count_loc(text.substr(begin, end - begin), prof);
}

}  // namespace

std::vector<LibraryComponent> extract_components(
    const std::vector<std::pair<std::string, std::string>>& sources,
    const LanguageProfile& profile, double log_base) {
    std::vector<LibraryComponent> components;

    for (const auto& [path, text] : sources) {
        TokenStream tokens = tokenize(text, profile, path);
        std::set<std::string> seen_pairs;  // pairs-once-per-file state

        // class/struct spans, for naming inline constructors
        struct ClassSpan {
            std::size_t begin, end;
            std::string name;
        };
        std::vector<ClassSpan> class_spans;
        for (std::size_t i = 0; i + 2 < tokens.size(); ++i) {
            if (tokens[i].kind == TokenKind::Operator &&
                (tokens[i].lexeme == "class" || tokens[i].lexeme == "struct") &&
                ident_operand(tokens[i + 1], profile)) {
                std::size_t j = i + 2;
                while (j < tokens.size() && !tokens[j].is_pair() && tokens[j].lexeme != ";") ++j;
                if (j < tokens.size() && tokens[j].is_pair() && tokens[j].lexeme == "{}")
                    class_spans.push_back({j + 1, tokens[j].pair_end, tokens[i + 1].lexeme});
            }
        }
        auto enclosing_class = [&](std::size_t i) -> std::string {
            for (const auto& span : class_spans)
                if (i >= span.begin && i < span.end) return span.name;
            return "";
        };

        std::size_t i = 0;
        while (i < tokens.size()) {
            DefinitionHead head;
            if (!match_definition(tokens, i, profile, enclosing_class(i), head)) {
                ++i;
                continue;
            }

            TokenStream reduced = component_census_tokens(tokens, head, profile, seen_pairs);

            LibraryComponent component;
            component.name = tokens[head.name_index].lexeme;
            component.owner = head.owner.empty() ? path : head.owner;
            component.census = classify(reduced);
            component.v_ci = volume(component.census, log_base);
            component.f_ci = 0;
            component.file = path;
            component.line = tokens[head.start].line;
            component.body_loc = body_line_count(text, tokens[head.body].line,
                                                 tokens[head.body].close_line, profile);
            components.push_back(std::move(component));

            i = tokens[head.body].pair_end;
        }
    }
    return components;
}

std::vector<LibraryComponent> detect_usage(const TokenStream& program_tokens,
                                           std::vector<LibraryComponent> components,
                                           const LanguageProfile& profile,
                                           std::vector<std::string>* warnings) {
    const bool ci = profile.usage_case_insensitive;
    std::map<std::string, std::vector<std::size_t>> by_name;
    for (std::size_t k = 0; k < components.size(); ++k) {
        components[k].f_ci = 0;
        by_name[fold_case(components[k].name, ci)].push_back(k);
    }
    if (by_name.empty()) return components;

    // Definition and prototype heads in the program are declarations, not
    // references; a program that merely clones a library function reuses
    // nothing. Keyword-led heads are skipped with or without a body.
    std::set<std::size_t> definition_names;
    for (std::size_t i = 0; i < program_tokens.size(); ++i) {
        DefinitionHead head;
        if (match_definition(program_tokens, i, profile, "", head)) {
            definition_names.insert(head.name_index);
            continue;
        }
        if (declaration_keyword(program_tokens[i], profile)) {
            std::size_t m = i;
            while (m < program_tokens.size() && keyword_op(program_tokens[m], profile)) ++m;
            if (m + 1 < program_tokens.size() && ident_operand(program_tokens[m], profile) &&
                program_tokens[m + 1].is_pair() && program_tokens[m + 1].lexeme == "()")
                definition_names.insert(m);
        }
    }

    auto credit = [&](const std::vector<std::size_t>& candidates, const Token& at,
                      bool constructors_only) {
        std::vector<std::size_t> hit;
        for (std::size_t k : candidates) {
            if (constructors_only &&
                fold_case(components[k].name, ci) != fold_case(components[k].owner, ci))
                continue;
            hit.push_back(k);
        }
        for (std::size_t k : hit) ++components[k].f_ci;
        if (hit.size() > 1 && warnings) {
            warnings->push_back("ambiguous reference '" + at.lexeme + "' at line " +
                                std::to_string(at.line) + ": credited " +
                                std::to_string(hit.size()) + " components");
        }
    };

    const TokenStream& toks = program_tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (!ident_operand(t, profile)) continue;
        if (definition_names.count(i)) continue;
        auto it = by_name.find(fold_case(t.lexeme, ci));
        if (it == by_name.end()) continue;

        bool call_shape = i + 1 < toks.size() && toks[i + 1].is_pair() &&
                          toks[i + 1].lexeme == "()";
        bool member_shape = i > 0 && toks[i - 1].kind == TokenKind::Operator &&
                            profile.is_member_access(toks[i - 1].lexeme);
        if (call_shape || member_shape) {
            // Owner-qualified references restrict the candidate set.
            if (i >= 2 && toks[i - 1].is_op("::") && ident_operand(toks[i - 2], profile)) {
                std::vector<std::size_t> scoped;
                for (std::size_t k : it->second)
                    if (fold_case(components[k].owner, ci) == fold_case(toks[i - 2].lexeme, ci))
                        scoped.push_back(k);
                credit(scoped, t, false);
            } else {
                credit(it->second, t, false);
            }
            continue;
        }

        // Constructor references: Type<...> var  |  Type var(...)
        if (i + 1 < toks.size() && toks[i + 1].is_op("<")) {
            std::size_t close = template_argument_close(toks, i + 1);
            if (close != std::string::npos && close + 1 < toks.size() &&
                ident_operand(toks[close + 1], profile))
                credit(it->second, t, true);
            continue;
        }
        if (i + 2 < toks.size() && ident_operand(toks[i + 1], profile) &&
            toks[i + 2].is_pair() && toks[i + 2].lexeme == "()")
            credit(it->second, t, true);
    }
    return components;
}

VolumeTriple model_params(const TokenCensus& program_census,
                          const std::vector<LibraryComponent>& components, VrMode mode,
                          double log_base) {
    VolumeTriple triple;
    triple.vr_mode = mode;
    triple.v_org = volume(program_census, log_base);

    if (mode == VrMode::Pooled) {
        TokenCensus pooled;
        for (const auto& c : components)
            if (c.f_ci >= 1) pooled = merge(pooled, c.census);
        triple.v_r = volume(pooled, log_base);
    } else {
        double sum = 0.0;
        for (const auto& c : components)
            if (c.f_ci >= 1) sum += static_cast<double>(c.f_ci) * volume(c.census, log_base);
        triple.v_r = sum;
    }
    triple.v_nr = triple.v_org + triple.v_r;
    return triple;
}

}  // namespace libinvest
