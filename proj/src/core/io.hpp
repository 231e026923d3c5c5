#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "core/encode.hpp"
#include "core/problem.hpp"

namespace adlin {

/// Raised on malformed input; the message carries the 1-based line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance format: one record per line, `#` starts a comment. Records:
///   meta <key> <value>
///   var <name> <lo> <hi>
///   varset <name> <v>...
///   alldifferent <name>...
///   linear <coeff> <name> [<coeff> <name>]... <rel> <rhs>   rel: <= >= = < >
///   bound_or <name> <= <k> [<name> <= <k>]...
/// Variables must be declared before use; the parsed instance is validated.
ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance_string(const std::string& text);
std::string serialize_instance(const ProblemInstance& p);

/// Board format: header `kakuro <rows> <cols> [weighted]`, then one token
/// per cell in row-major order: `#` for a plain wall, `#<down>/<right>` for
/// a wall with clues (either side may be `-`), `.` for an empty cell, and
/// `.<weight>` for a weighted empty cell.
KakuroGrid parse_kakuro_grid(std::istream& in);
std::string serialize_kakuro_grid(const KakuroGrid& g);

/// Word-list format: header `crypto`, then one `<word> <target>` per line.
CryptoPuzzle parse_crypto_words(std::istream& in);
std::string serialize_crypto_words(const CryptoPuzzle& p);

}  // namespace adlin
