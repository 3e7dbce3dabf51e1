#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

namespace libinvest {

// A language profile drives tokenization and token classification.
// Profiles are immutable after load and safe to share across threads.
//
// The built-in "cpp-thesis" profile encodes the classification scheme of
// classic Halstead tooling for C-family sources: keywords, delimiter
// pairs, statement terminators and stream names count as operators;
// identifiers, literals and header names count as operands.
struct LanguageProfile {
    std::string name;
    int profile_version = 1;

    // Identifier-shaped lexemes classified as operators.
    std::set<std::string> keywords;

    // Symbolic operators, matched longest-first.
    std::vector<std::string> symbolic_operators;

    // Two-character open/close pairs, e.g. "()", counted once per
    // matched pair occurrence.
    std::vector<std::string> paired_delimiters;

    std::set<std::string> statement_terminators;

    // Library stream/API names classified as operators (cin, cout, ...).
    std::set<std::string> api_operators;

    // Identifier names dropped from census streams (stream manipulators
    // and similar library plumbing the census does not attribute to the
    // program's own vocabulary).
    std::set<std::string> census_skip_names;

    // Operators whose adjacent operands feed the n* detection helper.
    std::set<std::string> io_markers;

    // Keywords counted as decision points for cyclomatic complexity.
    std::set<std::string> decision_keywords;

    // Keywords that begin statements, never declaration heads (return,
    // if, new, ...). Used to tell `return f();` from a prototype.
    std::set<std::string> statement_keywords;

    // Member-access operators used for call-shape detection.
    std::set<std::string> member_access_operators;

    std::string line_comment;        // e.g. "//"
    std::string block_comment_open;  // e.g. "/*"
    std::string block_comment_close; // e.g. "*/"

    std::string string_delims;  // each char opens/closes a literal, e.g. "\"'"

    std::string identifier_start;     // char class, e.g. "A-Za-z_"
    std::string identifier_continue;  // char class, e.g. "A-Za-z0-9_"

    // Directive keywords after which a header name (<...> or "...") is
    // lexed as a single operand and the line's remainder is dropped from
    // census streams. The directive prefix itself ("#") stays symbolic.
    std::set<std::string> include_directives;

    // File extensions considered source files of this language.
    std::vector<std::string> source_extensions;

    // Census construction switches (see lexer.hpp for their effect).
    bool join_negative_literals = true;
    bool census_absorb_member_calls = true;
    bool census_absorb_instantiations = true;
    bool component_pairs_once_per_file = true;
    bool component_absorb_param_type_keywords = true;
    bool usage_case_insensitive = true;

    // Derived character tables, filled by finalize().
    std::array<bool, 256> ident_start_table{};
    std::array<bool, 256> ident_cont_table{};

    bool is_identifier_start(unsigned char c) const { return ident_start_table[c]; }
    bool is_identifier_continue(unsigned char c) const { return ident_cont_table[c]; }
    bool is_keyword(const std::string& s) const { return keywords.count(s) != 0; }
    bool is_api_operator(const std::string& s) const { return api_operators.count(s) != 0; }
    bool is_member_access(const std::string& s) const { return member_access_operators.count(s) != 0; }

    // Validates invariants (no duplicate symbolic operators, well-formed
    // pairs, sane comment/string config) and builds derived tables.
    // Throws ProfileError on violation.
    void finalize();
};

// Returns a built-in profile ("cpp-thesis", "java") or loads and
// validates a profile file when `spec` names a readable path.
LanguageProfile load_profile(const std::string& spec);

// Parses the flat key/value profile format. `origin` is used in
// diagnostics only.
LanguageProfile parse_profile_text(const std::string& text, const std::string& origin);

std::vector<std::string> builtin_profile_names();

}  // namespace libinvest
