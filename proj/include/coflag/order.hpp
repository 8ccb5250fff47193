#pragma once

#include <string>
#include <vector>

#include "coflag/monomial.hpp"

namespace coflag {

enum class OrderKind { lex, grlex, grevlex };

std::string to_string(OrderKind kind);
OrderKind order_kind_from_string(const std::string& name);

// A monomial order: one of lex / graded lex / graded reverse lex, together
// with a significance permutation of the variables. precedence()[0] is the
// most significant variable index; the identity permutation gives the usual
// x1 > x2 > ... > xn convention.
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, std::vector<int> precedence);

    static MonomialOrder lex(int arity);
    static MonomialOrder grlex(int arity);
    static MonomialOrder grevlex(int arity);
    static MonomialOrder make(OrderKind kind, int arity);  // identity precedence

    OrderKind kind() const { return kind_; }
    int arity() const { return static_cast<int>(precedence_.size()); }
    const std::vector<int>& precedence() const { return precedence_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& other) const = default;

  private:
    OrderKind kind_;
    std::vector<int> precedence_;
};

}  // namespace coflag
