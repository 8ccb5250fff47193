#pragma once

#include <gmpxx.h>

#include <string>

namespace coflag {

// Exact arbitrary-precision rational coefficients. GMP keeps values
// canonical (reduced fraction, positive denominator) after every operation.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
    Rational r(text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace coflag
