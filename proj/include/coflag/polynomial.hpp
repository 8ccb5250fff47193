#pragma once

#include <vector>

#include "coflag/monomial.hpp"
#include "coflag/order.hpp"
#include "coflag/rational.hpp"

namespace coflag {

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term& other) const {
        return coeff == other.coeff && mono == other.mono;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are kept in a canonical normal form: strictly descending under the
// lexicographic order with the identity variable permutation, no zero
// coefficients, no repeated monomials. Equality is therefore plain
// term-by-term comparison. Order-sensitive operations (leading terms,
// division, S-polynomials) take the active MonomialOrder as a parameter and
// never change the stored normal form.
class Polynomial {
  public:
    explicit Polynomial(int arity);  // the zero polynomial
    static Polynomial zero(int arity);
    static Polynomial constant(int arity, const Rational& value);
    static Polynomial variable(int arity, int index);
    // Normalizes: merges duplicate monomials, drops zeros, sorts canonically.
    static Polynomial from_terms(int arity, std::vector<Term> terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Maximum total degree over all terms; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    // Throws std::invalid_argument on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    bool operator==(const Polynomial& other) const;

    // c * m * (*this); the workhorse of reduction loops.
    Polynomial scaled_shift(const Rational& c, const Monomial& m) const;

    // Image under the variable substitution x_i -> x_{perm[i]}.
    Polynomial permute_variables(const std::vector<int>& perm) const;

  private:
    int arity_;
    std::vector<Term> terms_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor
    Polynomial remainder;
};

// Multivariate division: f = sum_i quotients[i] * divisors[i] + remainder,
// where no remainder monomial is divisible by any divisor's leading monomial.
// Deterministic: each reduction step uses the first divisor in list order
// whose leading monomial divides the current leading monomial.
// Throws std::invalid_argument on empty divisor list, zero divisors, or
// arity mismatches.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);

// S-polynomial: cancels the leading terms of f and g against their lcm.
// Throws std::invalid_argument if either input is zero.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

}  // namespace coflag
