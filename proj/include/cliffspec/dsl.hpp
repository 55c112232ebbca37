#pragma once

#include "cliffspec/slice_functions.hpp"

// Text DSL for the rational slice-function universe.
//
//   expr     := rational
//             | 'coef-left:'  clifford ( '*(' rational ')' )?
//             | 'coef-right:' clifford ( '*(' rational ')' )?
//             | 'sum:[' expr (';' expr)* ']'
//             | 'sharp:(' expr ')'
//   rational := 'poly:[' num (',' num)* ']' ( '/[' num (',' num)* ']' )?
//             | 'reg:' int
//   clifford := '{' bitmask ':' num (',' bitmask ':' num)* '}'
//
// Coefficients are ascending in the variable; blade bitmasks are decimal.
// The algebra dimension of a literal is the smallest d containing its
// largest blade; sums promote everything to the largest d involved.

namespace cliffspec {

/// Parses an expression; throws std::invalid_argument with a position-tagged
/// message on malformed input.
SliceFunction parse_function(const std::string& text);

} // namespace cliffspec
