#include "coflag/order.hpp"

#include <stdexcept>

namespace coflag {

std::string to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
    }
    throw std::logic_error("unreachable order kind");
}

OrderKind order_kind_from_string(const std::string& name) {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "grevlex") return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial order '" + name +
                                "' (expected lex, grlex or grevlex)");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<bool> seen(precedence_.size(), false);
    for (int v : precedence_) {
        if (v < 0 || v >= static_cast<int>(precedence_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("order precedence must be a permutation of 0..arity-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

namespace {
std::vector<int> identity(int arity) {
    if (arity < 0) throw std::invalid_argument("order arity must be non-negative");
    std::vector<int> p(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}
}  // namespace

MonomialOrder MonomialOrder::lex(int arity) { return {OrderKind::lex, identity(arity)}; }
MonomialOrder MonomialOrder::grlex(int arity) { return {OrderKind::grlex, identity(arity)}; }
MonomialOrder MonomialOrder::grevlex(int arity) { return {OrderKind::grevlex, identity(arity)}; }

MonomialOrder MonomialOrder::make(OrderKind kind, int arity) {
    return {kind, identity(arity)};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != arity() || b.arity() != arity()) {
        throw std::invalid_argument("monomial arity does not match order arity");
    }
    if (kind_ != OrderKind::lex) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::grevlex) {
        // Graded part tied: scan from the least significant variable; the
        // monomial with the smaller exponent at the first difference wins.
        for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
            int d = a.exponent(*it) - b.exponent(*it);
            if (d != 0) return d > 0 ? -1 : 1;
        }
        return 0;
    }
    // lex / grlex tie-break: most significant variable first.
    for (int v : precedence_) {
        int d = a.exponent(v) - b.exponent(v);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace coflag
