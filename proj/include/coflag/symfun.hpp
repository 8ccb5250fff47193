#pragma once

#include <vector>

#include "coflag/polynomial.hpp"

namespace coflag {

// A subset of the variables of an ambient ring, given by strictly increasing
// indices. Symmetric-function constructors below are symmetric in exactly
// these variables and live in the full ambient arity.
class VariableSubset {
  public:
    VariableSubset(int arity, std::vector<int> indices);
    static VariableSubset all(int arity);
    // Variables with index in [first, last], inclusive.
    static VariableSubset range(int arity, int first, int last);

    int arity() const { return arity_; }
    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }

    bool operator==(const VariableSubset& other) const = default;

  private:
    int arity_;
    std::vector<int> indices_;
};

// Elementary symmetric polynomial e_k of the subset's variables.
// k == 0 gives 1; k > size gives 0. Throws std::invalid_argument for k < 0.
Polynomial elementary_sigma(int k, const VariableSubset& vars);

// Complete homogeneous sum h_k: all degree-k monomials in the subset's
// variables, each with coefficient 1. Built by the recursion
//   h_m(S) = x_j * h_{m-1}(S) + h_m(S \ {x_j}),  j = smallest index in S,
// which is also the shape the tests replay. k == 0 gives 1.
Polynomial monomial_sum(int k, const VariableSubset& vars);

// e_k evaluated at the squared variables: every exponent doubled.
Polynomial squared_sigma(int k, const VariableSubset& vars);

// The product of the subset's variables, as a single monomial.
Polynomial top_product(const VariableSubset& vars);

}  // namespace coflag
