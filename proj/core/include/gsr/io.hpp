#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gsr/fuzzy.hpp"
#include "gsr/gamma_semiring.hpp"

namespace gsr {

/// Parses the line-oriented table format:
///
///   gamma-semiring <name>
///   S <s_size>
///   Gamma <g_size>
///   addS        followed by s_size rows of s_size indices
///   addGamma    followed by g_size rows of g_size indices
///   prod        followed by one s_size x s_size block per gamma element,
///               blocks separated by blank lines
///
/// '#' starts a comment; blank lines are ignored. Does not validate the
/// axioms. Throws ParseError with a 1-based line number.
GammaSemiring parse_gamma_semiring(std::string_view text);

/// Canonical form: single spaces, one blank line between prod blocks,
/// trailing newline. parse . serialize is the identity on table contents
/// and serialize . parse is the identity on canonical bytes.
std::string serialize_gamma_semiring(const GammaSemiring& g);

GammaSemiring load_gamma_semiring_file(const std::filesystem::path& path);

/// Fuzzy subset format: one `index value` line per carrier element, values
/// as "p/q" or "p". Every index must appear exactly once.
FuzzySubset parse_fuzzy_subset(std::string_view text, CarrierTag tag, int carrier_size);

std::string serialize_fuzzy_subset(const FuzzySubset& subset);

FuzzySubset load_fuzzy_subset_file(const std::filesystem::path& path, CarrierTag tag,
                                   int carrier_size);

}  // namespace gsr
