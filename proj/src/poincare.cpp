#include "coflag/poincare.hpp"

#include <stdexcept>

namespace coflag {

void PoincarePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePolynomial PoincarePolynomial::one() { return from_coefficients({1}); }

PoincarePolynomial PoincarePolynomial::from_coefficients(std::vector<std::int64_t> coefficients) {
    PoincarePolynomial p;
    p.coeffs_ = std::move(coefficients);
    p.trim();
    return p;
}

PoincarePolynomial PoincarePolynomial::one_plus_t_power(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.front() = 1;
    c.back() = 1;
    return from_coefficients(std::move(c));
}

PoincarePolynomial PoincarePolynomial::one_minus_t_power(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.front() = 1;
    c.back() = -1;
    return from_coefficients(std::move(c));
}

std::int64_t PoincarePolynomial::coefficient(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
}

std::int64_t PoincarePolynomial::sum() const {
    std::int64_t total = 0;
    for (std::int64_t c : coeffs_) total += c;
    return total;
}

bool PoincarePolynomial::has_negative_coefficient() const {
    for (std::int64_t c : coeffs_) {
        if (c < 0) return true;
    }
    return false;
}

bool PoincarePolynomial::is_palindromic() const {
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    }
    return true;
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& other) const {
    std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return from_coefficients(std::move(out));
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return from_coefficients(std::move(out));
}

std::optional<PoincarePolynomial> PoincarePolynomial::divide_exact(
    const PoincarePolynomial& numerator, const PoincarePolynomial& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (numerator.is_zero()) return PoincarePolynomial{};
    if (numerator.degree() < denominator.degree()) return std::nullopt;
    std::vector<std::int64_t> rem = numerator.coeffs_;
    const std::vector<std::int64_t>& den = denominator.coeffs_;
    std::vector<std::int64_t> quot(rem.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::int64_t head = rem[k + den.size() - 1];
        if (head == 0) continue;
        if (head % den.back() != 0) return std::nullopt;
        std::int64_t q = head / den.back();
        quot[k] = q;
        for (std::size_t i = 0; i < den.size(); ++i) rem[k + i] -= q * den[i];
    }
    for (std::int64_t c : rem) {
        if (c != 0) return std::nullopt;
    }
    return from_coefficients(std::move(quot));
}

std::string PoincarePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        std::int64_t c = coeffs_[d];
        if (c == 0) continue;
        std::int64_t mag = c < 0 ? -c : c;
        std::string piece;
        if (d == 0) {
            piece = std::to_string(mag);
        } else {
            std::string power = d == 1 ? "t" : "t^" + std::to_string(d);
            piece = mag == 1 ? power : std::to_string(mag) + "*" + power;
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + piece;
        } else {
            out += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

}  // namespace coflag
