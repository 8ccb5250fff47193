#include "coflag/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace coflag {

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order)
    : gens_(std::move(generators)), order_(std::move(order)) {
    lms_.reserve(gens_.size());
    for (const Polynomial& g : gens_) {
        if (g.is_zero()) {
            throw std::invalid_argument("a Groebner basis cannot contain the zero polynomial");
        }
        if (g.arity() != order_.arity()) {
            throw std::invalid_argument("generator arity does not match order arity");
        }
        lms_.push_back(g.leading_term(order_).mono);
    }
}

bool GroebnerBasis::is_trivial() const {
    return gens_.size() == 1 && gens_.front().is_constant();
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    Rational inv = 1 / p.leading_term(order).coeff;
    return p * inv;
}

Polynomial remainder_of(const Polynomial& f, const std::vector<Polynomial>& divisors,
                        const MonomialOrder& order) {
    if (f.is_zero() || divisors.empty()) return f;
    return divide(f, divisors, order).remainder;
}

struct PairKey {
    std::size_t i, j;  // i < j
    auto operator<=>(const PairKey&) const = default;
};

// Normal selection strategy: pairs ordered by total degree of the lcm, then
// by the lcm under the active order, then by index for determinism. All the
// ideals this library targets are homogeneous, where this coincides with the
// classic sugar strategy.
struct QueueEntry {
    int lcm_degree;
    Monomial lcm;
    PairKey key;
};

struct QueueCompare {
    const MonomialOrder* order;
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.key < b.key;
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    if (generators.empty()) {
        throw std::invalid_argument("Groebner basis computation requires at least one generator");
    }
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators) {
        if (g.arity() != order.arity()) {
            throw std::invalid_argument("generator arity does not match order arity");
        }
        if (g.is_zero()) continue;  // zero generators contribute nothing
        if (g.is_constant()) {
            return GroebnerBasis({Polynomial::constant(order.arity(), Rational(1))}, order);
        }
        basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) return GroebnerBasis({}, order);  // the zero ideal

    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const Polynomial& g : basis) lms.push_back(g.leading_term(order).mono);

    std::set<QueueEntry, QueueCompare> queue{QueueCompare{&order}};
    std::set<PairKey> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        PairKey key{std::min(i, j), std::max(i, j)};
        Monomial L = Monomial::lcm(lms[key.i], lms[key.j]);
        queue.insert({L.degree(), L, key});
        pending.insert(key);
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);
    }

    while (!queue.empty()) {
        QueueEntry entry = *queue.begin();
        queue.erase(queue.begin());
        pending.erase(entry.key);
        std::size_t i = entry.key.i, j = entry.key.j;

        // First criterion: coprime leading monomials never contribute.
        if (lms[i].coprime_with(lms[j])) continue;
        // Chain criterion: if some other leading monomial divides the lcm and
        // both flanking pairs are already handled, this pair is redundant.
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i || k == j) continue;
            if (!lms[k].divides(entry.lcm)) continue;
            PairKey ik{std::min(i, k), std::max(i, k)};
            PairKey jk{std::min(j, k), std::max(j, k)};
            if (!pending.contains(ik) && !pending.contains(jk)) redundant = true;
        }
        if (redundant) continue;

        Polynomial s = spoly(basis[i], basis[j], order);
        Polynomial r = remainder_of(s, basis, order);
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            return GroebnerBasis({Polynomial::constant(order.arity(), Rational(1))}, order);
        }
        basis.push_back(make_monic(r, order));
        lms.push_back(basis.back().leading_term(order).mono);
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another's. Sorting by ascending leading monomial first makes a single
    // forward pass sufficient (a divisor never sorts after its multiple).
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t k = 0; k < by_lm.size(); ++k) by_lm[k] = k;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(lms[a], lms[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minimal_lms;
    for (std::size_t idx : by_lm) {
        bool covered = false;
        for (const Monomial& kept : minimal_lms) {
            if (kept.divides(lms[idx])) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            minimal.push_back(basis[idx]);
            minimal_lms.push_back(lms[idx]);
        }
    }

    // Tail-reduce each survivor modulo the others; leading monomials are
    // mutually indivisible, so they survive and the result is the unique
    // reduced basis.
    std::vector<Polynomial> reduced = minimal;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t m = 0; m < reduced.size(); ++m) {
            if (m != k) others.push_back(reduced[m]);
        }
        reduced[k] = make_monic(remainder_of(reduced[k], others, order), order);
    }
    return GroebnerBasis(std::move(reduced), order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.arity() != basis.arity()) {
        throw std::invalid_argument("polynomial arity does not match basis arity");
    }
    return remainder_of(f, basis.generators(), basis.order());
}

bool is_in_ideal(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis).is_zero();
}

bool is_groebner_basis(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    if (generators.empty()) {
        throw std::invalid_argument("the Groebner test requires at least one generator");
    }
    for (const Polynomial& g : generators) {
        if (g.is_zero()) {
            throw std::invalid_argument("the Groebner test does not accept the zero polynomial");
        }
        if (g.arity() != order.arity()) {
            throw std::invalid_argument("generator arity does not match order arity");
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            const Monomial& a = generators[i].leading_term(order).mono;
            const Monomial& b = generators[j].leading_term(order).mono;
            if (a.coprime_with(b)) continue;
            Polynomial s = spoly(generators[i], generators[j], order);
            if (!remainder_of(s, generators, order).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace coflag
