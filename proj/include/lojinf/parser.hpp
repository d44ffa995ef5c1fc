#pragma once

// System file format:
//
//   vars: z1 z2
//   F1 = z1            # comment
//   F2 = z1*z2 - 1
//
// expr   ::= term (('+'|'-') term)*
// term   ::= factor ('*' factor)*
// factor ::= rational | identifier ('^' uint)? | '(' expr ')'
// rational ::= ['-'] uint ('/' uint)?
//
// A leading '-' is also accepted in front of an identifier or parenthesis.

#include <string>
#include <string_view>
#include <vector>

#include "lojinf/polyring.hpp"

namespace lojinf {

struct SystemFile {
  std::vector<std::string> variables;
  std::vector<std::string> names;        ///< left-hand sides, in declaration order
  std::vector<MultiPoly> polynomials;    ///< arity = variables.size()
  std::vector<std::size_t> lines;        ///< 1-based source line of each polynomial
};

/// Parses the raw file without imposing polynomial-map constraints.
SystemFile parse_system_file(std::string_view text);

/// Parses a polynomial map: as many polynomials as variables, none constant.
PolyMap parse_system(std::string_view text);

/// Inverse of parse_system: `vars:` line followed by F1 = ..., F2 = ...
std::string print_system(const PolyMap& f);

}  // namespace lojinf
