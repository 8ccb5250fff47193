#include "coflag/poly_text.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "coflag/rational.hpp"

namespace coflag {

std::vector<std::string> default_variable_names(int arity) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(arity));
    for (int i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

namespace {

void check_names(int arity, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != arity) {
        throw std::invalid_argument("expected " + std::to_string(arity) + " variable names, got " +
                                    std::to_string(names.size()));
    }
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (int v = 0; v < m.arity(); ++v) {
        int e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<std::size_t>(v)];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string to_string(const Monomial& m) { return monomial_text(m, default_variable_names(m.arity())); }

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    check_names(m.arity(), names);
    return monomial_text(m, names);
}

std::string to_string(const Polynomial& p) {
    return to_string(p, default_variable_names(p.arity()));
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
    check_names(p.arity(), names);
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        bool negative = t.coeff < 0;
        Rational mag = abs(t.coeff);
        std::string coeff_text = to_string(mag);
        std::string piece;
        if (t.mono.is_unit()) {
            piece = coeff_text;
        } else if (mag == 1) {
            piece = monomial_text(t.mono, names);
        } else {
            piece = coeff_text + "*" + monomial_text(t.mono, names);
        }
        if (first) {
            out += negative ? "-" + piece : piece;
            first = false;
        } else {
            out += negative ? " - " + piece : " + " + piece;
        }
    }
    return out;
}

namespace {

class Parser {
  public:
    Parser(const std::string& text, int arity, const std::vector<std::string>& names)
        : text_(text), arity_(arity), names_(names) {
        check_names(arity, names);
        for (int i = 0; i < arity; ++i) {
            auto [it, inserted] = index_.emplace(names[static_cast<std::size_t>(i)], i);
            if (!inserted) {
                throw std::invalid_argument("duplicate variable name '" +
                                            names[static_cast<std::size_t>(i)] + "'");
            }
        }
    }

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial text");
        int sign = consume_sign();
        terms.push_back(parse_term(sign));
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c == '+') {
                sign = 1;
            } else if (c == '-') {
                sign = -1;
            } else {
                fail("expected '+' or '-'");
            }
            ++pos_;
            skip_ws();
            terms.push_back(parse_term(sign));
            skip_ws();
        }
        return Polynomial::from_terms(arity_, std::move(terms));
    }

  private:
    const std::string& text_;
    int arity_;
    const std::vector<std::string>& names_;
    std::unordered_map<std::string, int> index_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) +
                                    ": " + message);
    }

    int consume_sign() {
        if (at_end()) return 1;
        if (peek() == '+') {
            ++pos_;
            skip_ws();
            return 1;
        }
        if (peek() == '-') {
            ++pos_;
            skip_ws();
            return -1;
        }
        return 1;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    Rational parse_coefficient() {
        std::string numerator = read_digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::string denominator = read_digits();
            if (denominator.find_first_not_of('0') == std::string::npos) {
                fail("zero denominator");
            }
            return rational_from_string(numerator + "/" + denominator);
        }
        return rational_from_string(numerator);
    }

    int parse_exponent() {
        if (!at_end() && peek() == '-') fail("negative exponents are not allowed");
        std::string digits = read_digits();
        if (digits.size() > 9) fail("exponent too large");
        return std::stoi(digits);
    }

    void parse_factor(std::vector<int>& exps) {
        std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            fail("expected a variable name");
        }
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        auto it = index_.find(name);
        if (it == index_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        int exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exponent = parse_exponent();
        }
        exps[static_cast<std::size_t>(it->second)] += exponent;
    }

    Term parse_term(int sign) {
        Rational coeff(sign);
        std::vector<int> exps(static_cast<std::size_t>(arity_), 0);
        if (at_end()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational value = parse_coefficient();
            coeff *= value;
        } else {
            parse_factor(exps);
        }
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            parse_factor(exps);
            skip_ws();
        }
        return {std::move(coeff), Monomial::from_exponents(std::move(exps))};
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int arity) {
    return parse_polynomial(text, arity, default_variable_names(arity));
}

Polynomial parse_polynomial(const std::string& text, int arity,
                            const std::vector<std::string>& names) {
    return Parser(text, arity, names).parse();
}

Monomial parse_monomial(const std::string& text, int arity) {
    return parse_monomial(text, arity, default_variable_names(arity));
}

Monomial parse_monomial(const std::string& text, int arity,
                        const std::vector<std::string>& names) {
    Polynomial p = parse_polynomial(text, arity, names);
    if (p.terms().size() != 1 || p.terms().front().coeff != 1) {
        throw std::invalid_argument("'" + text + "' is not a monomial with coefficient 1");
    }
    return p.terms().front().mono;
}

}  // namespace coflag
