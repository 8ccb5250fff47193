#include "coflag/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace coflag {

namespace {

void check_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("monomial arity mismatch: " + std::to_string(a.arity()) +
                                    " vs " + std::to_string(b.arity()));
    }
}

}  // namespace

Monomial::Monomial(int arity) {
    if (arity < 0) throw std::invalid_argument("monomial arity must be non-negative");
    exps_.assign(static_cast<std::size_t>(arity), 0);
}

Monomial::Monomial(std::initializer_list<int> exponents) : exps_(exponents) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    }
}

Monomial Monomial::from_exponents(std::vector<int> exponents) {
    Monomial m(static_cast<int>(exponents.size()));
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    }
    m.exps_ = std::move(exponents);
    return m;
}

int Monomial::exponent(int variable) const {
    if (variable < 0 || variable >= arity()) {
        throw std::invalid_argument("variable index " + std::to_string(variable) +
                                    " out of range for arity " + std::to_string(arity()));
    }
    return exps_[static_cast<std::size_t>(variable)];
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_unit() const {
    for (int e : exps_) {
        if (e != 0) return false;
    }
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    check_same_arity(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
    check_same_arity(*this, other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_arity(*this, other);
    Monomial out(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] = exps_[i] + other.exps_[i];
    }
    return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    check_same_arity(*this, other);
    Monomial out(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (other.exps_[i] > exps_[i]) {
            throw std::invalid_argument("monomial division is not exact");
        }
        out.exps_[i] = exps_[i] - other.exps_[i];
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    Monomial out(a.arity());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    }
    return out;
}

}  // namespace coflag
