#pragma once

// Text syntax for elements of K and polynomials over K:
//   integers, the field variable (default `t`), variables T1..Tr,
//   + - * / ^ and parentheses. Division is only allowed by nonzero elements
//   of K; exponents are integer literals (negative only on elements of K).

#include <optional>
#include <string>
#include <string_view>

#include "skeleta/monoval.hpp"

namespace skeleta {

/// Parses an element of K, e.g. "t^2*(2+t)/(3+t)". `var` names the field
/// variable (use "u" for coordinates over a ramified extension).
BaseElement parse_element(std::string_view text, const std::string& var = "t");

/// Parses a polynomial in T1..Tr over K, e.g. "t + T1*T2^2". The arity is the
/// largest variable index used unless given explicitly (it must then cover
/// every variable that occurs).
MultivariatePoly parse_polynomial(std::string_view text,
                                  std::optional<std::size_t> arity = std::nullopt,
                                  const std::string& var = "t");

}  // namespace skeleta
