#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coflag {

// A univariate polynomial in t with integer coefficients, indexed by degree.
// Used for graded dimension counts; factory helpers keep the sequence
// trimmed (no trailing zeros). Negative coefficients are representable so
// that intermediate products like (1 - t^4) exist, but the consumers that
// promise dimension counts check non-negativity at their boundaries.
class PoincarePolynomial {
  public:
    PoincarePolynomial() = default;  // zero
    static PoincarePolynomial one();
    static PoincarePolynomial from_coefficients(std::vector<std::int64_t> coefficients);
    // 1 + t^degree (degree >= 1) — convenient for exterior factors.
    static PoincarePolynomial one_plus_t_power(int degree);
    // 1 - t^degree (degree >= 1).
    static PoincarePolynomial one_minus_t_power(int degree);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coefficient(int d) const;
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t sum() const;  // total dimension: value at t = 1

    bool has_negative_coefficient() const;
    // Coefficient sequence reads the same in both directions.
    bool is_palindromic() const;

    PoincarePolynomial operator+(const PoincarePolynomial& other) const;
    PoincarePolynomial operator*(const PoincarePolynomial& other) const;
    bool operator==(const PoincarePolynomial& other) const = default;

    // Exact division; nullopt if the remainder is nonzero.
    static std::optional<PoincarePolynomial> divide_exact(const PoincarePolynomial& numerator,
                                                          const PoincarePolynomial& denominator);

    // "1 + 2*t^2 + t^4"; "0" for the zero polynomial.
    std::string to_string() const;

  private:
    std::vector<std::int64_t> coeffs_;

    void trim();
};

}  // namespace coflag
