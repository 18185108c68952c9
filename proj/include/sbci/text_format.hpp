#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sbci/algebra.hpp"

namespace sbci {

/// Reads the algebra text format:
///
///   n <size> top <index>
///   arrow:
///   <n rows of n indices>
///   double_arrow:        (optional)
///   <n rows of n indices>
///   labels:              (optional)
///   <n tokens, on one or more lines>
///
/// Lines whose first non-blank character is '#' are comments. Throws
/// ParseError with a 1-based line and column.
FiniteAlgebra parse_algebra(std::string_view text);
/// Reads a file; throws Error when it cannot be opened.
FiniteAlgebra load_algebra(const std::string& path);

/// Canonical text with right-aligned columns. parse_algebra inverts it.
/// Throws Error for an empty label or one containing whitespace.
std::string render_algebra(const FiniteAlgebra& alg);

}  // namespace sbci
