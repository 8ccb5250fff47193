#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coflag/poincare.hpp"
#include "coflag/polynomial.hpp"
#include "coflag/quotient.hpp"

namespace coflag {

// The four classical series of full flag manifolds G/T plus the rank-2
// exceptional one, and a catch-all for presentations loaded from files.
enum class Family { A, B, C, D, G2, custom };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

// The three shapes of distinguished ideal members produced by
// relation_family: complete homogeneous sums in a trailing block of
// variables (family A), even-power sums over multi-indices (families B, C
// and the even half of D), and odd-power sums (the odd half of D).
enum class RelationKind { complete_sum, even_sum, odd_sum };

std::string to_string(RelationKind kind);

// Exponent box cut out by the leading-monomial staircase: candidate basis
// monomials are x1^a1...xn^an with 0 <= ai <= bounds[i]. When
// product_condition is set (family D), a tuple with ai == bounds[i] is kept
// only if some later exponent vanishes, i.e. a_{i+1} * ... * a_n == 0.
struct BasisPattern {
    std::vector<int> bounds;
    bool product_condition = false;
};

// A cohomology presentation: a polynomial ring with graded variables and an
// ideal of relations, plus the numerical data of the underlying homogeneous
// space (invariant degrees of G and of the subgroup, degrees of exterior
// generators when the subgroup has smaller rank, and the manifold
// dimension). Construction checks the bookkeeping identity
//   dimension == 2*sum(degrees_g) - 2*sum(degrees_h) - #exterior_degrees
// and that every exterior degree is odd with (d+1)/2 among degrees_g (an
// exterior generator of degree 2k-1 is sourced by an invariant of degree k).
class SpacePresentation {
  public:
    SpacePresentation(std::string name, Family family, int rank,
                      std::vector<std::string> variable_names,
                      std::vector<Polynomial> ideal_generators, MonomialOrder order,
                      std::vector<int> degrees_g, std::vector<int> degrees_h,
                      std::vector<int> exterior_degrees, int dimension,
                      std::optional<BasisPattern> pattern);

    const std::string& name() const { return name_; }
    Family family() const { return family_; }
    int rank() const { return rank_; }
    int arity() const { return static_cast<int>(variable_names_.size()); }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::vector<Polynomial>& ideal_generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<int>& degrees_g() const { return degrees_g_; }
    const std::vector<int>& degrees_h() const { return degrees_h_; }
    const std::vector<int>& exterior_degrees() const { return exterior_degrees_; }
    int dimension() const { return dimension_; }
    const std::optional<BasisPattern>& pattern() const { return pattern_; }

    QuotientRing quotient() const;  // Groebner basis under the stored order

  private:
    std::string name_;
    Family family_;
    int rank_;
    std::vector<std::string> variable_names_;
    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    std::vector<int> degrees_g_;
    std::vector<int> degrees_h_;
    std::vector<int> exterior_degrees_;
    int dimension_;
    std::optional<BasisPattern> pattern_;
};

// The full flag manifold G/T of the given classical family and rank, as a
// quotient of a polynomial ring in rank variables:
//   A: sigma_j(x0..xn) with x0 := -(x1+...+xn) substituted, j = 2..n+1;
//   B, C: sigma_j at squared variables, j = 1..n;
//   D: sigma_j at squared variables for j = 1..n-1, plus x1*...*xn
// (rank >= 1; rank >= 2 for D). Throws std::invalid_argument otherwise.
SpacePresentation flag_presentation(Family family, int rank);

// The exceptional rank-2 flag manifold: variables x, y of weight 2 with
// relations x^2 + 3xy + 3y^2 and x^6, dimension 12.
SpacePresentation g2_flag_presentation();

// Distinguished ideal member for 1 <= p <= rank:
//   complete_sum (A):  h_{n-p+2}(x_{n-p+1}, ..., x_n);
//   even_sum (B/C/D):  sum over i1+...+ip = n-p+1 of x^{2i1}...x^{2ip}
//                      in the last p variables;
//   odd_sum (D):       sum over i1+...+ip = n, all ij >= 1, of
//                      x^{2i1-1}...x^{2ip-1} in the last p variables.
// Throws std::invalid_argument if the kind does not apply to the family.
Polynomial relation_family(const SpacePresentation& p, int index, RelationKind kind);

// Every distinguished member for the presentation's family, in a fixed
// deterministic sequence (A: complete sums p=1..n; B/C: even sums; D: even
// sums then odd sums; G2: x^2+3xy+3y^2, x^6, y^6).
std::vector<Polynomial> relation_family_all(const SpacePresentation& p);

// The predicted monomial basis from the presentation's BasisPattern, in the
// same deterministic sort as QuotientRing::standard_monomials. Throws
// std::invalid_argument if the presentation carries no pattern.
std::vector<Monomial> expected_basis(const SpacePresentation& p);

// |W(G)| / |W(H)| for the classical families and G2 with a maximal torus:
// (n+1)!, 2^n n!, 2^n n!, 2^(n-1) n!, 12.
std::int64_t weyl_order(Family family, int rank);

// Closed-form graded dimension count from invariant degrees. degrees_g and
// degrees_h are matched after removing the entries listed in
// unmatched_degrees_g (sources of exterior generators of degree 2k-1):
//   product over matched pairs (1 - t^{2k}) / (1 - t^{2l})
//     * product over unmatched k of (1 + t^{2k-1}).
// Throws std::invalid_argument if the counts do not line up, if
// unmatched_degrees_g is not a sub-multiset of degrees_g, or if the division
// is not exact with non-negative coefficients.
PoincarePolynomial poincare_from_invariant_degrees(std::vector<int> degrees_g,
                                                   std::vector<int> degrees_h,
                                                   std::vector<int> unmatched_degrees_g);

// Restriction of invariant generators to a subgroup's Cartan algebra: the
// images of the degree-k_i invariants as polynomials in split_rank + ...
// variables.
struct RestrictionData {
    std::vector<std::string> variable_names;
    std::vector<Polynomial> images;
    int split_rank = 0;  // number of polynomial-direction variables
};

// Do the images beyond split_rank lie in the ideal generated by the first
// split_rank images *within the subalgebra generated by all the images*?
// Quotient coefficients must themselves be polynomial expressions in the
// images — membership in the plain polynomial ring is not enough (u^3 lies
// in <u^2> as a polynomial, but not with a quotient drawn from Q[u^2, u^3]).
// Decided exactly: tag each image with a fresh variable, eliminate the
// original variables to obtain the relation ideal among images, and test tag
// membership there. The order fixes the ambient variable count; the verdict
// itself is order-independent.
bool cartan_type_check(const RestrictionData& r, const MonomialOrder& order);

// A product model: polynomial quotient part tensor an exterior algebra on
// odd-degree generators.
struct CartanModel {
    SpacePresentation polynomial_part;
    std::vector<int> exterior_degrees;
};

// Graded dimension count of the model: the quotient's count times
// product (1 + t^d) over the exterior degrees.
PoincarePolynomial cartan_model_poincare(const CartanModel& model);

// Does total equal base * fiber as graded counts?
bool fibration_factorization_check(const PoincarePolynomial& total,
                                   const PoincarePolynomial& base,
                                   const PoincarePolynomial& fiber);

}  // namespace coflag
