#include "coflag/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace coflag {

namespace {

void check_same_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(a.arity()) +
                                    " vs " + std::to_string(b.arity()));
    }
}

// The storage order: lexicographic with the identity permutation. Kept as a
// bare comparison (not a MonomialOrder) so normalization never allocates.
int canonical_compare(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
    }
    return 0;
}

bool is_canonical(const MonomialOrder& order) {
    if (order.kind() != OrderKind::lex) return false;
    const auto& p = order.precedence();
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (p[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

}  // namespace

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("polynomial arity must be non-negative");
}

Polynomial Polynomial::zero(int arity) { return Polynomial(arity); }

Polynomial Polynomial::constant(int arity, const Rational& value) {
    Polynomial p(arity);
    if (value != 0) p.terms_.push_back({value, Monomial(arity)});
    return p;
}

Polynomial Polynomial::variable(int arity, int index) {
    if (index < 0 || index >= arity) {
        throw std::invalid_argument("variable index " + std::to_string(index) +
                                    " out of range for arity " + std::to_string(arity));
    }
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    exps[static_cast<std::size_t>(index)] = 1;
    Polynomial p(arity);
    p.terms_.push_back({Rational(1), Monomial::from_exponents(std::move(exps))});
    return p;
}

Polynomial Polynomial::from_terms(int arity, std::vector<Term> terms) {
    Polynomial p(arity);
    for (const Term& t : terms) {
        if (t.mono.arity() != arity) {
            throw std::invalid_argument("term arity does not match polynomial arity");
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return canonical_compare(a.mono, b.mono) > 0;
    });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            Rational sum = p.terms_.back().coeff + t.coeff;
            if (sum == 0) {
                p.terms_.pop_back();
            } else {
                p.terms_.back().coeff = sum;
            }
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_) {
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_unit());
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) {
        throw std::invalid_argument("the zero polynomial has no leading term");
    }
    if (order.arity() != arity_) {
        throw std::invalid_argument("order arity does not match polynomial arity");
    }
    if (is_canonical(order)) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_) {
        if (order.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_) {
        if (t.mono == m) return t.coeff;
    }
    return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_arity(*this, other);
    Polynomial out(arity_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = canonical_compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rational sum = terms_[i].coeff + other.terms_[j].coeff;
            if (sum != 0) out.terms_.push_back({sum, terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(arity_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rational neg = -t.coeff;
        out.terms_.push_back({neg, t.mono});
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_arity(*this, other);
    std::vector<Term> products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : other.terms_) {
            Rational c = a.coeff * b.coeff;
            products.push_back({std::move(c), a.mono * b.mono});
        }
    }
    return from_terms(arity_, std::move(products));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out(arity_);
    if (scalar == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rational c = t.coeff * scalar;
        out.terms_.push_back({std::move(c), t.mono});
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return arity_ == other.arity_ && terms_ == other.terms_;
}

Polynomial Polynomial::scaled_shift(const Rational& c, const Monomial& m) const {
    if (m.arity() != arity_) {
        throw std::invalid_argument("monomial arity does not match polynomial arity");
    }
    Polynomial out(arity_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    // Multiplying every monomial by the same m shifts all exponent vectors by
    // a constant, which preserves the canonical order — no re-sort needed.
    for (const Term& t : terms_) {
        Rational coeff = t.coeff * c;
        out.terms_.push_back({std::move(coeff), t.mono * m});
    }
    return out;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != arity_) {
        throw std::invalid_argument("permutation size does not match polynomial arity");
    }
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= arity_ || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("variable permutation must be a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Term> mapped;
    mapped.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<int> exps(static_cast<std::size_t>(arity_), 0);
        for (int v = 0; v < arity_; ++v) {
            exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                t.mono.exponent(v);
        }
        mapped.push_back({t.coeff, Monomial::from_exponents(std::move(exps))});
    }
    return from_terms(arity_, std::move(mapped));
}

namespace {

// Working representation for division: terms ascending under the active
// order, so the leading term is back() and removal is O(1).
std::vector<Term> ascending_terms(const Polynomial& p, const MonomialOrder& order) {
    std::vector<Term> t = p.terms();
    std::sort(t.begin(), t.end(), [&order](const Term& a, const Term& b) {
        return order.less(a.mono, b.mono);
    });
    return t;
}

// work + c * m * divisor, both ascending; the caller arranges c so that the
// leading terms cancel.
std::vector<Term> merge_scaled(const std::vector<Term>& work, const std::vector<Term>& divisor,
                               const Rational& c, const Monomial& m, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(work.size() + divisor.size());
    std::size_t i = 0, j = 0;
    while (i < work.size() && j < divisor.size()) {
        Monomial dm = divisor[j].mono * m;
        int cmp = order.compare(work[i].mono, dm);
        if (cmp < 0) {
            out.push_back(work[i++]);
        } else if (cmp > 0) {
            Rational coeff = divisor[j].coeff * c;
            out.push_back({std::move(coeff), std::move(dm)});
            ++j;
        } else {
            Rational sum = work[i].coeff + divisor[j].coeff * c;
            if (sum != 0) out.push_back({std::move(sum), work[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < work.size(); ++i) out.push_back(work[i]);
    for (; j < divisor.size(); ++j) {
        Rational coeff = divisor[j].coeff * c;
        out.push_back({std::move(coeff), divisor[j].mono * m});
    }
    return out;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
    if (divisors.empty()) throw std::invalid_argument("division requires at least one divisor");
    if (order.arity() != f.arity()) {
        throw std::invalid_argument("order arity does not match dividend arity");
    }
    std::vector<std::vector<Term>> div_terms;
    std::vector<Term> div_leading;
    div_terms.reserve(divisors.size());
    for (const Polynomial& d : divisors) {
        check_same_arity(f, d);
        if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
        div_terms.push_back(ascending_terms(d, order));
        div_leading.push_back(div_terms.back().back());
    }

    std::vector<Term> work = ascending_terms(f, order);
    std::vector<Term> remainder;
    std::vector<std::vector<Term>> quotients(divisors.size());

    while (!work.empty()) {
        const Term lead = work.back();
        std::size_t chosen = divisors.size();
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (div_leading[i].mono.divides(lead.mono)) {
                chosen = i;
                break;
            }
        }
        if (chosen == divisors.size()) {
            remainder.push_back(lead);
            work.pop_back();
            continue;
        }
        Rational c = lead.coeff / div_leading[chosen].coeff;
        Monomial m = lead.mono.divided_by(div_leading[chosen].mono);
        quotients[chosen].push_back({c, m});
        Rational neg = -c;
        work = merge_scaled(work, div_terms[chosen], neg, m, order);
    }

    DivisionResult result{{}, Polynomial::from_terms(f.arity(), std::move(remainder))};
    result.quotients.reserve(divisors.size());
    for (auto& q : quotients) {
        result.quotients.push_back(Polynomial::from_terms(f.arity(), std::move(q)));
    }
    return result;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    check_same_arity(f, g);
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("S-polynomial of the zero polynomial is undefined");
    }
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial L = Monomial::lcm(lf.mono, lg.mono);
    Rational inv_f = 1 / lf.coeff;
    Rational inv_g = 1 / lg.coeff;
    return f.scaled_shift(inv_f, L.divided_by(lf.mono)) -
           g.scaled_shift(inv_g, L.divided_by(lg.mono));
}

}  // namespace coflag
