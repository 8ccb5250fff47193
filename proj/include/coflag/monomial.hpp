#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace coflag {

// A power product x1^a1 * ... * xn^an, stored as its exponent vector.
// Exponents are non-negative; arity (the number of variables) is fixed at
// construction and must agree between operands of every binary operation.
class Monomial {
  public:
    explicit Monomial(int arity);
    Monomial(std::initializer_list<int> exponents);
    static Monomial from_exponents(std::vector<int> exponents);

    int arity() const { return static_cast<int>(exps_.size()); }
    int exponent(int variable) const;
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;

    bool is_unit() const;  // all exponents zero
    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // Exact division; throws std::invalid_argument unless other divides *this.
    Monomial divided_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  private:
    std::vector<int> exps_;
};

}  // namespace coflag
