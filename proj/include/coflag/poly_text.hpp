#pragma once

#include <string>
#include <vector>

#include "coflag/monomial.hpp"
#include "coflag/polynomial.hpp"

namespace coflag {

// Text form of polynomials, e.g. "x1^2 - 2*x1*x2 + 3/2". Grammar:
//
//   poly   := term (('+'|'-') term)*          (a leading '-' is allowed)
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := name ('^' uint)?
//   coeff  := uint ('/' uint)?
//
// Whitespace is free between tokens. Variable names default to x1..xn and
// can be overridden (e.g. {"x", "y"}). Printing emits the canonical term
// order (descending lexicographic, identity permutation), so
// parse(print(p)) == p bit-exactly and printing is deterministic.

std::vector<std::string> default_variable_names(int arity);

std::string to_string(const Monomial& m);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p);
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

// Throws std::invalid_argument with a position-annotated message on syntax
// errors, unknown variable names, or negative exponents.
Polynomial parse_polynomial(const std::string& text, int arity);
Polynomial parse_polynomial(const std::string& text, int arity,
                            const std::vector<std::string>& names);

Monomial parse_monomial(const std::string& text, int arity);
Monomial parse_monomial(const std::string& text, int arity,
                        const std::vector<std::string>& names);

}  // namespace coflag
