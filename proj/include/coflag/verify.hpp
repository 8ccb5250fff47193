#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coflag/spaces.hpp"

namespace coflag {

// One machine-checked statement. `statement` is the mathematical claim in
// words; `witness` is empty on success and otherwise carries the concrete
// counterexample (a nonzero normal form, a mismatched count, a stray
// monomial, ...). Reports are pure data; rendering is the caller's job.
struct Claim {
    std::string id;         // stable slash-separated key, unique in a report
    std::string statement;  // human-readable form of what was checked
    bool passed = false;
    std::string witness;    // failure evidence, empty iff passed

    bool operator==(const Claim& other) const = default;
};

class VerificationReport {
  public:
    const std::vector<Claim>& claims() const { return claims_; }
    bool all_passed() const;
    std::size_t failure_count() const;

    void add(std::string id, std::string statement, bool passed, std::string witness = "");
    void merge(const VerificationReport& other);

  private:
    std::vector<Claim> claims_;
};

// Each distinguished relation-family member reduces to zero modulo the
// presentation ideal (one claim per member).
VerificationReport verify_relations_in_ideal(const SpacePresentation& p);

// The relation family is itself a Groebner basis of the presentation ideal:
// every member is monic; all S-polynomial pairs reduce to zero; the
// presentation's generators lie in the ideal the family generates; and the
// reduced basis of the presentation ideal consists of family members (for
// families A, B, C it equals the family exactly). For family A this also
// checks the one-more-variable route: the symmetric-function ideal in
// rank+1 variables has reduced basis {x0 + ... + xn} plus the lifted
// reduced basis of the presentation.
VerificationReport verify_relations_are_groebner(const SpacePresentation& p);

// The predicted monomial basis equals the standard monomials of the
// quotient, and its size equals the Weyl-group order ratio.
VerificationReport verify_basis(const SpacePresentation& p);

// Trailing-block identities (family A): the complete sum of degree m in the
// trailing block x_{k-1}, ..., x_n lies in the ideal for every k = 2..n+1
// and every m >= k up to degree_cap (default 2*rank + 2). For family D: the
// staircase product x_k^{2k-1} * prod_{j>k} x_j^{2j-3} lies in the ideal for
// k = 1..n.
VerificationReport verify_vanishing_identities(const SpacePresentation& p, int degree_cap = 0);

// The quotient's top graded degree equals the manifold dimension minus the
// exterior-generator degrees, and (non-custom families) the designated
// monomial is nonzero and spans that component (A: x1 x2^2 ... xn^n;
// B/C: x1 x2^3 ... xn^(2n-1); D: x2^2 x3^4 ... xn^(2n-2); G2: x y^5).
VerificationReport verify_top_class(const SpacePresentation& p);

// The quotient's graded count equals the closed form from invariant degrees,
// is palindromic, and peaks in degree == dimension.
VerificationReport verify_poincare_consistency(const SpacePresentation& p);

// A product model is a plausible cohomology: palindromic, top degree equal
// to expected_dimension, constant term 1.
VerificationReport verify_model(const CartanModel& model, int expected_dimension);

// Everything applicable to the presentation's family, merged.
VerificationReport verify_space(const SpacePresentation& p, int degree_cap = 0);

}  // namespace coflag
