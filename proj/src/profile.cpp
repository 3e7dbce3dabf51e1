#include "libinvest/profile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "libinvest/error.hpp"

namespace libinvest {

namespace {

// Classic Halstead classification for C-family sources: stream names
// are operators, header names are operands, delimiter pairs count once
// per pair. Census flags encode how tallies treat library references
// (see lexer.cpp).
const char* const kCppThesisProfile = R"(
# built-in profile: C-family surface syntax, classic Halstead classification
profile_version = 1
name = cpp-thesis

keywords = include void int bool char float double long short unsigned signed
keywords = return if else for while do switch case default break continue goto
keywords = class struct enum union public private protected new delete const
keywords = static template typename using namespace this true false sizeof
keywords = typedef virtual friend inline extern register auto volatile mutable
keywords = explicit operator throw try catch

symbolic_operators = <<= >>= ->* :: << >> <= >= == != && || ++ -- += -= *= /=
symbolic_operators = %= &= |= ^= -> # + - * / % = < > ! & | ^ ~ . , : ?

paired_delimiters = () {} []
statement_terminators = ;

api_operators = cin cout
census_skip_names = endl
io_markers = << >>
decision_keywords = if while for case catch
statement_keywords = return if else while for do switch case default break
statement_keywords = continue goto new delete throw sizeof this true false
member_access_operators = . ->
include_directives = include

line_comment = //
block_comment_open = /*
block_comment_close = */
string_delims = " '

identifier_start = A-Za-z_
identifier_continue = A-Za-z0-9_

source_extensions = .cpp .cc .cxx .c .h .hpp .hh

join_negative_literals = true
census_absorb_member_calls = true
census_absorb_instantiations = true
component_pairs_once_per_file = true
component_absorb_param_type_keywords = true
usage_case_insensitive = true
)";

const char* const kJavaProfile = R"(
# built-in profile: Java surface syntax
profile_version = 1
name = java

keywords = abstract assert boolean break byte case catch char class const
keywords = continue default do double else enum extends final finally float
keywords = for goto if implements import instanceof int interface long native
keywords = new package private protected public return short static strictfp
keywords = super switch synchronized this throw throws transient try void
keywords = volatile while true false null var record

symbolic_operators = >>>= <<= >>= >>> :: << >> <= >= == != && || ++ -- += -=
symbolic_operators = *= /= %= &= |= ^= -> + - * / % = < > ! & | ^ ~ . , : ? @

paired_delimiters = () {} []
statement_terminators = ;

decision_keywords = if while for case catch
statement_keywords = return if else while for do switch case default break
statement_keywords = continue new throw assert instanceof this super true false null
member_access_operators = .

line_comment = //
block_comment_open = /*
block_comment_close = */
string_delims = " '

identifier_start = A-Za-z_$
identifier_continue = A-Za-z0-9_$

source_extensions = .java

join_negative_literals = true
census_absorb_member_calls = true
census_absorb_instantiations = true
component_pairs_once_per_file = true
component_absorb_param_type_keywords = true
usage_case_insensitive = false
)";

std::vector<std::string> split_items(const std::string& value) {
    std::vector<std::string> items;
    std::istringstream in(value);
    std::string item;
    while (in >> item) items.push_back(item);
    return items;
}

void parse_char_class(const std::string& cls, std::array<bool, 256>& table,
                      const std::string& field) {
    if (cls.empty()) throw ProfileError("empty character class", field);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i + 2 < cls.size() && cls[i + 1] == '-') {
            unsigned char lo = static_cast<unsigned char>(cls[i]);
            unsigned char hi = static_cast<unsigned char>(cls[i + 2]);
            if (lo > hi) throw ProfileError("inverted character range", field);
            for (unsigned c = lo; c <= hi; ++c) table[c] = true;
            i += 2;
        } else {
            table[static_cast<unsigned char>(cls[i])] = true;
        }
    }
}

bool parse_bool(const std::string& value, const std::string& field, std::size_t line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ProfileError("expected true or false, got '" + value + "'", field, line);
}

}  // namespace

void LanguageProfile::finalize() {
    if (name.empty()) throw ProfileError("missing name", "name");
    if (profile_version < 1) throw ProfileError("profile_version must be >= 1", "profile_version");

    std::set<std::string> seen;
    for (const auto& op : symbolic_operators) {
        if (op.empty()) throw ProfileError("empty symbolic operator", "symbolic_operators");
        if (!seen.insert(op).second)
            throw ProfileError("duplicate symbolic operator '" + op + "'", "symbolic_operators");
    }
    // Longest-first order makes maximal munch a simple linear scan.
    std::sort(symbolic_operators.begin(), symbolic_operators.end(),
              [](const std::string& a, const std::string& b) {
                  return a.size() != b.size() ? a.size() > b.size() : a < b;
              });

    std::set<char> pair_chars;
    for (const auto& pair : paired_delimiters) {
        if (pair.size() != 2 || pair[0] == pair[1])
            throw ProfileError("paired delimiter must be two distinct characters: '" + pair + "'",
                               "paired_delimiters");
        if (!pair_chars.insert(pair[0]).second || !pair_chars.insert(pair[1]).second)
            throw ProfileError("delimiter character reused across pairs", "paired_delimiters");
    }
    for (const auto& op : symbolic_operators)
        for (char c : op)
            if (pair_chars.count(c))
                throw ProfileError("symbolic operator '" + op + "' collides with a paired delimiter",
                                   "symbolic_operators");

    if (block_comment_open.empty() != block_comment_close.empty())
        throw ProfileError("block comment needs both open and close markers", "block_comment_open");

    ident_start_table.fill(false);
    ident_cont_table.fill(false);
    parse_char_class(identifier_start, ident_start_table, "identifier_start");
    parse_char_class(identifier_continue, ident_cont_table, "identifier_continue");

    for (const auto& kw : keywords) {
        if (kw.empty() || !is_identifier_start(static_cast<unsigned char>(kw[0])))
            throw ProfileError("keyword '" + kw + "' is not identifier-shaped", "keywords");
        if (api_operators.count(kw))
            throw ProfileError("'" + kw + "' is both keyword and api operator", "api_operators");
    }
    for (const auto& name : census_skip_names)
        if (keywords.count(name) || api_operators.count(name))
            throw ProfileError("census_skip_names entry '" + name + "' is already an operator",
                               "census_skip_names");
}

LanguageProfile parse_profile_text(const std::string& text, const std::string& origin) {
    LanguageProfile profile;
    profile.join_negative_literals = false;
    profile.census_absorb_member_calls = false;
    profile.census_absorb_instantiations = false;
    profile.component_pairs_once_per_file = false;
    profile.component_absorb_param_type_keywords = false;
    profile.usage_case_insensitive = false;

    bool saw_version = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line[0] == '#') continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ProfileError("expected 'key = value' in " + origin, line, lineno);
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);

        auto items = split_items(value);
        if (key == "profile_version") {
            profile.profile_version = std::stoi(value);
            saw_version = true;
        } else if (key == "name") {
            profile.name = value;
        } else if (key == "keywords") {
            profile.keywords.insert(items.begin(), items.end());
        } else if (key == "symbolic_operators") {
            profile.symbolic_operators.insert(profile.symbolic_operators.end(), items.begin(),
                                              items.end());
        } else if (key == "paired_delimiters") {
            profile.paired_delimiters.insert(profile.paired_delimiters.end(), items.begin(),
                                             items.end());
        } else if (key == "statement_terminators") {
            profile.statement_terminators.insert(items.begin(), items.end());
        } else if (key == "api_operators") {
            profile.api_operators.insert(items.begin(), items.end());
        } else if (key == "census_skip_names") {
            profile.census_skip_names.insert(items.begin(), items.end());
        } else if (key == "io_markers") {
            profile.io_markers.insert(items.begin(), items.end());
        } else if (key == "decision_keywords") {
            profile.decision_keywords.insert(items.begin(), items.end());
        } else if (key == "statement_keywords") {
            profile.statement_keywords.insert(items.begin(), items.end());
        } else if (key == "member_access_operators") {
            profile.member_access_operators.insert(items.begin(), items.end());
        } else if (key == "include_directives") {
            profile.include_directives.insert(items.begin(), items.end());
        } else if (key == "line_comment") {
            profile.line_comment = value;
        } else if (key == "block_comment_open") {
            profile.block_comment_open = value;
        } else if (key == "block_comment_close") {
            profile.block_comment_close = value;
        } else if (key == "string_delims") {
            for (const auto& item : items) {
                if (item.size() != 1)
                    throw ProfileError("string delimiter must be one character", key, lineno);
                profile.string_delims += item[0];
            }
        } else if (key == "identifier_start") {
            profile.identifier_start = value;
        } else if (key == "identifier_continue") {
            profile.identifier_continue = value;
        } else if (key == "source_extensions") {
            profile.source_extensions.insert(profile.source_extensions.end(), items.begin(),
                                             items.end());
        } else if (key == "join_negative_literals") {
            profile.join_negative_literals = parse_bool(value, key, lineno);
        } else if (key == "census_absorb_member_calls") {
            profile.census_absorb_member_calls = parse_bool(value, key, lineno);
        } else if (key == "census_absorb_instantiations") {
            profile.census_absorb_instantiations = parse_bool(value, key, lineno);
        } else if (key == "component_pairs_once_per_file") {
            profile.component_pairs_once_per_file = parse_bool(value, key, lineno);
        } else if (key == "component_absorb_param_type_keywords") {
            profile.component_absorb_param_type_keywords = parse_bool(value, key, lineno);
        } else if (key == "usage_case_insensitive") {
            profile.usage_case_insensitive = parse_bool(value, key, lineno);
        } else {
            throw ProfileError("unknown key in " + origin, key, lineno);
        }
    }
    if (!saw_version) throw ProfileError("missing profile_version in " + origin, "profile_version");
    profile.finalize();
    return profile;
}

std::vector<std::string> builtin_profile_names() { return {"cpp-thesis", "java"}; }

LanguageProfile load_profile(const std::string& spec) {
    if (spec == "cpp-thesis") return parse_profile_text(kCppThesisProfile, "builtin cpp-thesis");
    if (spec == "java") return parse_profile_text(kJavaProfile, "builtin java");

    std::ifstream in(spec, std::ios::binary);
    if (!in)
        throw ProfileError("unknown built-in profile and unreadable file: '" + spec + "'", "name");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_profile_text(buffer.str(), spec);
}

}  // namespace libinvest
