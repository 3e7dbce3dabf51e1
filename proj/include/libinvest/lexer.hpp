#pragma once

#include <string>

#include "libinvest/profile.hpp"
#include "libinvest/token.hpp"

namespace libinvest {

// Converts raw source text into a comment-free token stream.
//
// Deterministic: output depends only on (source, profile). Comments and
// whitespace never become tokens; paired delimiters are emitted once per
// matched pair at the opening position; string literals and header
// include names become single operand tokens; symbolic operators match
// longest-first. Throws LexError on unterminated comments/strings,
// unmatched delimiters and undecodable bytes.
TokenStream tokenize(const std::string& source, const LanguageProfile& profile,
                     const std::string& file = {});

// Which census a reduced stream feeds. Program censuses and library
// component censuses count a few constructs differently (see below).
enum class CensusRole {
    Program,
    Component,
};

// Reduces a full token stream to the stream a census tallies.
//
// Rules applied for CensusRole::Program (all profile-gated):
//  - an include directive keeps `#`, the directive keyword and the header
//    name; the rest of that line is dropped
//  - a member call `recv . name ( args )` drops receiver, access operator,
//    name and argument tokens; the parens pair itself stays
//  - a type instantiation `Type < args > var` or `Type var ( args )` is a
//    constructor reference: its tokens are dropped (the parens pair of
//    the second form stays)
//  - operand names listed in census_skip_names are dropped
//
// For CensusRole::Component the member-call/instantiation rules apply to
// the body as well, and component signatures are handled by the
// extractor (see linkage.hpp), which also applies the pairs-once-per-file
// rule. This function does not renumber pair_end fields; censuses only
// tally lexemes.
TokenStream census_stream(const TokenStream& tokens, const LanguageProfile& profile,
                          CensusRole role = CensusRole::Program);

// Physical lines that are neither blank nor comment-only, with block
// comment spans excluded. Comment syntax comes from the profile.
std::size_t count_loc(const std::string& source, const LanguageProfile& profile);

// True when the bytes form valid UTF-8 (sources must decode as text).
bool is_valid_text(const std::string& bytes);

// Index of the `>` closing a template argument list whose `<` sits at
// `open_index`, or npos. Aborts at statement terminators and pair tokens,
// so `i < stackSize;` never scans as a template. `>>` closes two levels.
std::size_t template_argument_close(const TokenStream& tokens, std::size_t open_index);

}  // namespace libinvest
