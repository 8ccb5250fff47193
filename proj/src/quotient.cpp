#include "coflag/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace coflag {

QuotientRing::QuotientRing(GroebnerBasis basis, int grading_weight)
    : basis_(std::move(basis)), weight_(grading_weight) {
    if (grading_weight < 1) throw std::invalid_argument("grading weight must be positive");
}

QuotientRing QuotientRing::from_generators(const std::vector<Polynomial>& generators,
                                           const MonomialOrder& order, int grading_weight) {
    return QuotientRing(buchberger(generators, order), grading_weight);
}

namespace {

// Inclusive per-variable exponent bound from pure-power leading monomials:
// the largest exponent of x_v surviving the staircase, or no value at all if
// no pure power of x_v leads a generator (infinite-dimensional direction).
std::optional<std::vector<int>> bounds_from(const std::vector<Monomial>& lms, int arity) {
    std::vector<int> bounds(static_cast<std::size_t>(arity), -2);
    for (const Monomial& m : lms) {
        int support_var = -1;
        bool pure = true;
        for (int v = 0; v < arity; ++v) {
            if (m.exponent(v) > 0) {
                if (support_var >= 0) {
                    pure = false;
                    break;
                }
                support_var = v;
            }
        }
        if (!pure) continue;
        if (support_var < 0) {
            // The unit monomial leads a generator: the whole ring collapses.
            for (int v = 0; v < arity; ++v) bounds[static_cast<std::size_t>(v)] = -1;
            return bounds;
        }
        int bound = m.exponent(support_var) - 1;
        auto& slot = bounds[static_cast<std::size_t>(support_var)];
        if (slot == -2 || bound < slot) slot = bound;
    }
    for (int v = 0; v < arity; ++v) {
        if (bounds[static_cast<std::size_t>(v)] == -2) return std::nullopt;
    }
    return bounds;
}

}  // namespace

bool QuotientRing::is_finite_dimensional() const {
    return bounds_from(basis_.leading_monomials(), basis_.arity()).has_value();
}

std::vector<int> QuotientRing::staircase_bounds() const {
    auto bounds = bounds_from(basis_.leading_monomials(), basis_.arity());
    if (!bounds) {
        throw std::invalid_argument(
            "the quotient is infinite-dimensional: some variable has no pure-power "
            "leading monomial");
    }
    return *bounds;
}

std::vector<Monomial> QuotientRing::standard_monomials() const {
    std::vector<int> bounds = staircase_bounds();
    int arity = basis_.arity();
    std::int64_t box = 1;
    for (int b : bounds) {
        if (b < 0) return {};
        box *= b + 1;
        if (box > 50'000'000) {
            throw std::invalid_argument("standard monomial enumeration is too large");
        }
    }
    const std::vector<Monomial>& lms = basis_.leading_monomials();
    std::vector<Monomial> standard;
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    while (true) {
        Monomial candidate = Monomial::from_exponents(exps);
        bool blocked = false;
        for (const Monomial& lm : lms) {
            if (lm.divides(candidate)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) standard.push_back(std::move(candidate));
        int v = arity - 1;
        while (v >= 0 && exps[static_cast<std::size_t>(v)] == bounds[static_cast<std::size_t>(v)]) {
            exps[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
        ++exps[static_cast<std::size_t>(v)];
    }
    const MonomialOrder& order = basis_.order();
    std::sort(standard.begin(), standard.end(), [&order](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return order.less(a, b);
    });
    return standard;
}

std::int64_t QuotientRing::dimension() const {
    return static_cast<std::int64_t>(standard_monomials().size());
}

PoincarePolynomial QuotientRing::poincare_polynomial() const {
    std::vector<Monomial> standard = standard_monomials();
    if (standard.empty()) return {};
    int top = standard.back().degree();
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(weight_ * top) + 1, 0);
    for (const Monomial& m : standard) {
        coeffs[static_cast<std::size_t>(weight_ * m.degree())] += 1;
    }
    return PoincarePolynomial::from_coefficients(std::move(coeffs));
}

Polynomial QuotientRing::reduce(const Polynomial& f) const { return normal_form(f, basis_); }

Polynomial QuotientRing::coset_mul(const Polynomial& f, const Polynomial& g) const {
    return reduce(f * g);
}

std::pair<int, std::vector<Monomial>> QuotientRing::top_class() const {
    std::vector<Monomial> standard = standard_monomials();
    if (standard.empty()) {
        throw std::invalid_argument("the zero ring has no top class");
    }
    int top = standard.back().degree();
    std::vector<Monomial> top_monomials;
    for (const Monomial& m : standard) {
        if (m.degree() == top) top_monomials.push_back(m);
    }
    return {weight_ * top, std::move(top_monomials)};
}

}  // namespace coflag
