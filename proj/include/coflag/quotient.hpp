#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coflag/groebner.hpp"
#include "coflag/poincare.hpp"

namespace coflag {

// The quotient of a polynomial ring by an ideal, presented through a reduced
// Groebner basis. Cosets are represented by normal forms; the standard
// monomials (those outside the leading-monomial staircase) form a vector
// space basis. A grading weight (default 2: algebraic degree d sits in
// grading 2d) converts algebraic degrees into the graded dimension count.
class QuotientRing {
  public:
    explicit QuotientRing(GroebnerBasis basis, int grading_weight = 2);
    static QuotientRing from_generators(const std::vector<Polynomial>& generators,
                                        const MonomialOrder& order, int grading_weight = 2);

    const GroebnerBasis& basis() const { return basis_; }
    int grading_weight() const { return weight_; }

    // True iff every variable has some pure power inside the leading-monomial
    // ideal, i.e. the quotient is a finite-dimensional vector space.
    bool is_finite_dimensional() const;

    // Per-variable exponent bounds from the pure-power leading monomials.
    // Throws std::invalid_argument if the quotient is infinite-dimensional.
    std::vector<int> staircase_bounds() const;

    // Monomials not divisible by any leading monomial, sorted by total degree
    // and then ascending under the basis order. Throws if infinite-dimensional.
    std::vector<Monomial> standard_monomials() const;
    std::int64_t dimension() const;

    // Coefficient of t^(weight * d) = number of standard monomials of
    // algebraic degree d. Throws if infinite-dimensional.
    PoincarePolynomial poincare_polynomial() const;

    // Canonical coset representative: the normal form modulo the basis.
    Polynomial reduce(const Polynomial& f) const;
    Polynomial coset_mul(const Polynomial& f, const Polynomial& g) const;

    // Highest graded degree with a nonzero component, together with the
    // standard monomials sitting there. Throws if infinite-dimensional or if
    // the quotient is the zero ring.
    std::pair<int, std::vector<Monomial>> top_class() const;

  private:
    GroebnerBasis basis_;
    int weight_;
};

}  // namespace coflag
