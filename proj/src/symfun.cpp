#include "coflag/symfun.hpp"

#include <stdexcept>
#include <utility>

namespace coflag {

VariableSubset::VariableSubset(int arity, std::vector<int> indices)
    : arity_(arity), indices_(std::move(indices)) {
    if (arity < 0) throw std::invalid_argument("subset arity must be non-negative");
    int previous = -1;
    for (int v : indices_) {
        if (v < 0 || v >= arity) {
            throw std::invalid_argument("subset index " + std::to_string(v) +
                                        " out of range for arity " + std::to_string(arity));
        }
        if (v <= previous) {
            throw std::invalid_argument("subset indices must be strictly increasing");
        }
        previous = v;
    }
}

VariableSubset VariableSubset::all(int arity) {
    std::vector<int> idx(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) idx[static_cast<std::size_t>(i)] = i;
    return {arity, std::move(idx)};
}

VariableSubset VariableSubset::range(int arity, int first, int last) {
    if (first > last) return {arity, {}};
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(last - first + 1));
    for (int i = first; i <= last; ++i) idx.push_back(i);
    return {arity, std::move(idx)};
}

Polynomial elementary_sigma(int k, const VariableSubset& vars) {
    if (k < 0) throw std::invalid_argument("symmetric function index must be non-negative");
    int arity = vars.arity();
    if (k > vars.size()) return Polynomial::zero(arity);
    // Row of the Pascal-style recursion e_k(S + x) = e_k(S) + x * e_{k-1}(S).
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1, Polynomial::zero(arity));
    e[0] = Polynomial::constant(arity, Rational(1));
    for (int v : vars.indices()) {
        Polynomial x = Polynomial::variable(arity, v);
        for (int m = k; m >= 1; --m) {
            e[static_cast<std::size_t>(m)] =
                e[static_cast<std::size_t>(m)] + x * e[static_cast<std::size_t>(m - 1)];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

Polynomial monomial_sum(int k, const VariableSubset& vars) {
    if (k < 0) throw std::invalid_argument("symmetric function index must be non-negative");
    int arity = vars.arity();
    if (k == 0) return Polynomial::constant(arity, Rational(1));
    if (vars.size() == 0) return Polynomial::zero(arity);
    // h_m over the suffix subsets: h_m(x_i..) = x_i * h_{m-1}(x_i..) + h_m(x_{i+1}..),
    // filled from the last variable backwards.
    const std::vector<int>& idx = vars.indices();
    std::vector<Polynomial> h(static_cast<std::size_t>(k) + 1, Polynomial::zero(arity));
    h[0] = Polynomial::constant(arity, Rational(1));
    for (std::size_t pos = idx.size(); pos-- > 0;) {
        Polynomial x = Polynomial::variable(arity, idx[pos]);
        // In-place update: after the loop, h[m] holds h_m of the suffix from pos.
        for (int m = 1; m <= k; ++m) {
            h[static_cast<std::size_t>(m)] =
                x * h[static_cast<std::size_t>(m - 1)] + h[static_cast<std::size_t>(m)];
        }
    }
    return h[static_cast<std::size_t>(k)];
}

Polynomial squared_sigma(int k, const VariableSubset& vars) {
    Polynomial e = elementary_sigma(k, vars);
    std::vector<Term> doubled;
    doubled.reserve(e.terms().size());
    for (const Term& t : e.terms()) {
        std::vector<int> exps = t.mono.exponents();
        for (int& v : exps) v *= 2;
        doubled.push_back({t.coeff, Monomial::from_exponents(std::move(exps))});
    }
    return Polynomial::from_terms(e.arity(), std::move(doubled));
}

Polynomial top_product(const VariableSubset& vars) {
    std::vector<int> exps(static_cast<std::size_t>(vars.arity()), 0);
    for (int v : vars.indices()) exps[static_cast<std::size_t>(v)] = 1;
    return Polynomial::from_terms(vars.arity(),
                                  {{Rational(1), Monomial::from_exponents(std::move(exps))}});
}

}  // namespace coflag
