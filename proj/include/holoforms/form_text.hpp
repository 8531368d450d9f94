#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "holoforms/form.hpp"

// Text grammar for forms (whitespace insensitive):
//
//   form  := ['+'|'-'] term (('+'|'-') term)*
//   term  := factor* [basis] | '0'
//   factor:= rational | 'x'i ['^' int]           ('*' optional between factors)
//   basis := 'dx'i ('^' 'dx'j)*
//
// Canonical output lists components in increasing multi-index order and
// monomials in graded order, e.g. "dx1^dx2 + 3/2 x3 dx4^dx5 - x1^2 dx6^dx7".

namespace holoforms {

/// Parses a homogeneous form on ℝⁿ. Repeated basis indices are normalised by
/// sign (dx2^dx1 → -dx1^dx2, dx1^dx1 → 0). When the text carries no basis
/// factor the degree is `degree` if given, else 0. Throws ParseError with the
/// line and column of the offending token.
DifferentialForm parse_form(std::string_view text, int n, std::optional<int> degree = std::nullopt);

/// Parses a polynomial: a form text with no basis factors.
Polynomial parse_polynomial(std::string_view text, int n);

std::string format_form(const DifferentialForm& a);

}  // namespace holoforms
