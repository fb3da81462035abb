#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

/// Parses disjoint-cycle notation like "(1,2)(3,4,5)".  Points are 1-based in
/// text and 0-based in the returned Permutation.  Whitespace is ignored; the
/// identity is written "()".  Throws parse_error with the byte offset of the
/// offending character.
Permutation parse_cycles(std::string_view text, int degree);

/// Highest 1-based point mentioned in the text (0 for the identity "()").
int max_point_in_cycles(std::string_view text);

/// Prints in 1-based cycle notation; fixed points are omitted, the identity
/// becomes "()".
std::string to_cycles(const Permutation& p);

/// Parses one permutation per line; '#' starts a comment, blank lines are
/// skipped.  The common degree is the highest point mentioned anywhere.
std::vector<Permutation> parse_generator_lines(const std::vector<std::string>& lines);

/// parse_generator_lines over the contents of a file.
std::vector<Permutation> read_generator_file(const std::string& path);

} // namespace burnside
