#pragma once

#include <vector>

#include "coflag/polynomial.hpp"

namespace coflag {

// A reduced Groebner basis together with the order it was computed under.
// Invariants: every generator is monic; no term of any generator is
// divisible by the leading monomial of another; generators are sorted by
// ascending leading monomial. The reduced basis of an ideal is unique for a
// fixed order, so equality of bases is equality of ideals.
class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Monomial>& leading_monomials() const { return lms_; }
    int arity() const { return order_.arity(); }
    bool is_trivial() const;  // the whole ring: basis == {1}

    bool operator==(const GroebnerBasis& other) const {
        return gens_ == other.gens_ && order_ == other.order_;
    }

  private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    std::vector<Monomial> lms_;
};

// Buchberger's algorithm with the coprime-leading-monomial and chain
// criteria and sugar-degree pair selection; the result is interreduced to
// the unique reduced basis. Deterministic for a fixed input sequence, and
// the output is invariant under permuting the input generators.
// Throws std::invalid_argument on an empty generator list or arity
// mismatches; zero generators are ignored (an all-zero list yields the
// empty basis of the zero ideal).
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);

// Remainder of f under division by the basis: the unique normal form.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool is_in_ideal(const Polynomial& f, const GroebnerBasis& basis);

// Buchberger's criterion: do all S-polynomials of the given generators
// reduce to zero modulo the list itself? Pairs with coprime leading
// monomials are skipped (their S-polynomials always reduce to zero).
// Throws std::invalid_argument on an empty list or a zero generator.
bool is_groebner_basis(const std::vector<Polynomial>& generators,
                       const MonomialOrder& order);

}  // namespace coflag
