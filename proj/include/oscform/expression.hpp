#pragma once

#include <cstddef>
#include <string_view>

#include "oscform/rational_function.hpp"

namespace oscform {

/// Where an expression sits inside a larger text, for error positions.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses integers, identifiers from `vars`, + - * / ^ (non-negative integer
/// exponents) and parentheses. Whitespace is ignored.
RationalFunction parse_expression(std::string_view text, const VarList& vars, SourcePos origin = {});

/// As parse_expression, but rejects a non-constant denominator.
Polynomial parse_polynomial(std::string_view text, const VarList& vars, SourcePos origin = {});

}  // namespace oscform
