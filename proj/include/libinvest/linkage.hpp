#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "libinvest/census.hpp"
#include "libinvest/lexer.hpp"
#include "libinvest/profile.hpp"

namespace libinvest {

// One library function/method: the unit of reuse detection.
// Constructor components are named after their type.
struct LibraryComponent {
    std::string name;
    std::string owner;   // enclosing class, or source file for free functions
    TokenCensus census;  // signature + body, reduced per the component rules
    double v_ci = 0.0;   // volume(census) at the run's log base
    std::uint64_t f_ci = 0;  // usage frequency in the analyzed program
    std::size_t body_loc = 0;
    std::string file;
    std::size_t line = 0;
};

enum class VrMode {
    Pooled,  // volume of the merged censuses of used components
    Summed,  // frequency-weighted sum of f_ci * V_ci
};

// Model parameter triple. v_nr == v_org + v_r by construction.
struct VolumeTriple {
    double v_org = 0.0;
    double v_r = 0.0;
    double v_nr = 0.0;
    VrMode vr_mode = VrMode::Pooled;
};

// Splits library sources into named function/method components by
// signature pattern + brace matching. Recognized shapes:
//   Owner :: name ( params ) { body }     qualified method
//   Owner :: Owner ( params ) { body }    constructor (component name = Owner)
//   ret-keyword name ( params ) { body }  free function
//
// Census rules for a component (signature included):
//  - the `Owner ::` qualifier is absorbed into the owner field, except in
//    constructors, where both name tokens stay operands
//  - parameter type keywords are absorbed; modifiers and names count
//  - with component_pairs_once_per_file, each pair lexeme counts only at
//    its first occurrence across the file's components, in file order
//
// f_ci is initialized to 0; v_ci is the component volume at `log_base`.
// Sources tokenize first, so unbalanced braces surface as LexError with
// location. A file with no recognizable components yields no entries.
std::vector<LibraryComponent> extract_components(
    const std::vector<std::pair<std::string, std::string>>& sources,  // (path, text)
    const LanguageProfile& profile, double log_base = 10.0);

// Fills f_ci by counting name-based references in the program stream:
// an identifier matching a component name followed by a call parens pair
// or preceded by a member-access operator, plus one credit per type
// instantiation for constructor components. `Owner::name` references
// credit only matching owners; bare collisions credit every candidate
// and append a note to `warnings` when provided.
std::vector<LibraryComponent> detect_usage(const TokenStream& program_tokens,
                                           std::vector<LibraryComponent> components,
                                           const LanguageProfile& profile,
                                           std::vector<std::string>* warnings = nullptr);

// Computes (Vorg, Vr, Vnr). Pooled mode merges the censuses of the
// components with f_ci >= 1 (each included once) and takes the volume of
// the union; Summed mode evaluates the frequency-weighted sum f_ci * V_ci.
VolumeTriple model_params(const TokenCensus& program_census,
                          const std::vector<LibraryComponent>& components, VrMode mode,
                          double log_base = 10.0);

}  // namespace libinvest
