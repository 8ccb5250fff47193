#include "coflag/spaces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "coflag/poly_text.hpp"
#include "coflag/symfun.hpp"

namespace coflag {

std::string to_string(Family family) {
    switch (family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G2";
        case Family::custom: return "custom";
    }
    throw std::logic_error("unreachable family");
}

Family family_from_string(const std::string& name) {
    if (name == "A" || name == "a") return Family::A;
    if (name == "B" || name == "b") return Family::B;
    if (name == "C" || name == "c") return Family::C;
    if (name == "D" || name == "d") return Family::D;
    if (name == "G2" || name == "g2") return Family::G2;
    if (name == "custom") return Family::custom;
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected A, B, C, D, G2 or custom)");
}

std::string to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::complete_sum: return "complete_sum";
        case RelationKind::even_sum: return "even_sum";
        case RelationKind::odd_sum: return "odd_sum";
    }
    throw std::logic_error("unreachable relation kind");
}

SpacePresentation::SpacePresentation(std::string name, Family family, int rank,
                                     std::vector<std::string> variable_names,
                                     std::vector<Polynomial> ideal_generators, MonomialOrder order,
                                     std::vector<int> degrees_g, std::vector<int> degrees_h,
                                     std::vector<int> exterior_degrees, int dimension,
                                     std::optional<BasisPattern> pattern)
    : name_(std::move(name)),
      family_(family),
      rank_(rank),
      variable_names_(std::move(variable_names)),
      generators_(std::move(ideal_generators)),
      order_(std::move(order)),
      degrees_g_(std::move(degrees_g)),
      degrees_h_(std::move(degrees_h)),
      exterior_degrees_(std::move(exterior_degrees)),
      dimension_(dimension),
      pattern_(std::move(pattern)) {
    if (rank_ < 1) throw std::invalid_argument("presentation rank must be at least 1");
    if (variable_names_.empty()) {
        throw std::invalid_argument("a presentation needs at least one variable");
    }
    if (order_.arity() != arity()) {
        throw std::invalid_argument("order arity does not match the variable count");
    }
    for (const Polynomial& g : generators_) {
        if (g.arity() != arity()) {
            throw std::invalid_argument("generator arity does not match the variable count");
        }
    }
    for (int d : degrees_g_) {
        if (d < 1) throw std::invalid_argument("invariant degrees must be positive");
    }
    for (int d : degrees_h_) {
        if (d < 1) throw std::invalid_argument("invariant degrees must be positive");
    }
    std::vector<int> available = degrees_g_;
    int twice_sum = 0;
    for (int d : degrees_g_) twice_sum += 2 * d;
    for (int d : degrees_h_) twice_sum -= 2 * d;
    for (int d : exterior_degrees_) {
        if (d < 1 || d % 2 == 0) {
            throw std::invalid_argument("exterior generator degrees must be odd");
        }
        auto it = std::find(available.begin(), available.end(), (d + 1) / 2);
        if (it == available.end()) {
            throw std::invalid_argument("exterior degree " + std::to_string(d) +
                                        " has no matching invariant degree");
        }
        available.erase(it);
        twice_sum -= 1;
    }
    if (twice_sum != dimension_) {
        throw std::invalid_argument("dimension bookkeeping failed: expected " +
                                    std::to_string(twice_sum) + ", presentation says " +
                                    std::to_string(dimension_));
    }
    if (pattern_ && static_cast<int>(pattern_->bounds.size()) != arity()) {
        throw std::invalid_argument("basis pattern bounds must cover every variable");
    }
}

QuotientRing SpacePresentation::quotient() const {
    return QuotientRing::from_generators(generators_, order_);
}

namespace {

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

std::vector<int> iota_degrees(int first, int last, int step) {
    std::vector<int> out;
    for (int d = first; d <= last; d += step) out.push_back(d);
    return out;
}

}  // namespace

SpacePresentation flag_presentation(Family family, int rank) {
    int n = rank;
    if (n < 1) throw std::invalid_argument("flag rank must be at least 1");
    if (family == Family::D && n < 2) {
        throw std::invalid_argument("family D needs rank at least 2");
    }
    std::vector<std::string> names = default_variable_names(n);
    MonomialOrder order = MonomialOrder::lex(n);
    std::vector<Polynomial> gens;
    std::vector<int> degrees_g;
    std::vector<int> bounds;
    std::string name;
    int dimension = 0;
    bool product_condition = false;
    VariableSubset all = VariableSubset::all(n);
    switch (family) {
        case Family::A: {
            // sigma_j in n+1 variables with the first one set to minus the sum
            // of the others: sigma_j(-s, x1..xn) = e_j(x1..xn) - s*e_{j-1}(x1..xn).
            Polynomial s = Polynomial::zero(n);
            for (int v = 0; v < n; ++v) s = s + Polynomial::variable(n, v);
            for (int j = 2; j <= n + 1; ++j) {
                gens.push_back(elementary_sigma(j, all) - s * elementary_sigma(j - 1, all));
            }
            degrees_g = iota_degrees(2, n + 1, 1);
            bounds = iota_degrees(1, n, 1);
            dimension = n * n + n;
            name = "SU(" + std::to_string(n + 1) + ")/T^" + std::to_string(n);
            break;
        }
        case Family::B:
        case Family::C: {
            for (int j = 1; j <= n; ++j) gens.push_back(squared_sigma(j, all));
            degrees_g = iota_degrees(2, 2 * n, 2);
            bounds = iota_degrees(1, 2 * n - 1, 2);
            dimension = 2 * n * n;
            name = family == Family::B
                       ? "Spin(" + std::to_string(2 * n + 1) + ")/T^" + std::to_string(n)
                       : "Sp(" + std::to_string(n) + ")/T^" + std::to_string(n);
            break;
        }
        case Family::D: {
            for (int j = 1; j <= n - 1; ++j) gens.push_back(squared_sigma(j, all));
            gens.push_back(top_product(all));
            degrees_g = iota_degrees(2, 2 * n - 2, 2);
            degrees_g.push_back(n);
            bounds = iota_degrees(1, 2 * n - 1, 2);
            product_condition = true;
            dimension = 2 * n * n - 2 * n;
            name = "Spin(" + std::to_string(2 * n) + ")/T^" + std::to_string(n);
            break;
        }
        case Family::G2:
            if (n != 2) throw std::invalid_argument("the G2 flag manifold has rank 2");
            return g2_flag_presentation();
        case Family::custom:
            throw std::invalid_argument("custom presentations are loaded from files");
    }
    return SpacePresentation(std::move(name), family, n, std::move(names), std::move(gens), order,
                             std::move(degrees_g), ones(n), {}, dimension,
                             BasisPattern{std::move(bounds), product_condition});
}

SpacePresentation g2_flag_presentation() {
    int n = 2;
    std::vector<std::string> names{"x", "y"};
    Polynomial x = Polynomial::variable(n, 0);
    Polynomial y = Polynomial::variable(n, 1);
    Polynomial quadratic = x * x + x * y * Rational(3) + y * y * Rational(3);
    Polynomial sextic = Polynomial::from_terms(n, {{Rational(1), Monomial{6, 0}}});
    return SpacePresentation("G2/T^2", Family::G2, n, std::move(names), {quadratic, sextic},
                             MonomialOrder::lex(n), {2, 6}, {1, 1}, {}, 12,
                             BasisPattern{{1, 5}, false});
}

namespace {

// Enumerate tuples (i_1..i_parts) with i_j >= min_value summing to total.
void for_each_composition(int total, int parts, int min_value,
                          const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> tuple(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> recurse = [&](int position, int remaining) {
        if (position == parts - 1) {
            if (remaining >= min_value) {
                tuple[static_cast<std::size_t>(position)] = remaining;
                emit(tuple);
            }
            return;
        }
        for (int value = min_value; value <= remaining - min_value * (parts - 1 - position);
             ++value) {
            tuple[static_cast<std::size_t>(position)] = value;
            recurse(position + 1, remaining - value);
        }
    };
    if (parts > 0) recurse(0, total);
}

}  // namespace

Polynomial relation_family(const SpacePresentation& p, int index, RelationKind kind) {
    int n = p.rank();
    if (index < 1 || index > n) {
        throw std::invalid_argument("relation index must lie between 1 and the rank");
    }
    Family family = p.family();
    switch (kind) {
        case RelationKind::complete_sum: {
            if (family != Family::A) {
                throw std::invalid_argument("complete sums form relations only in family A");
            }
            // h_{n-index+2} in the trailing variables x_{n-index+1}..x_n.
            return monomial_sum(n - index + 2, VariableSubset::range(n, n - index, n - 1));
        }
        case RelationKind::even_sum: {
            if (family != Family::B && family != Family::C && family != Family::D) {
                throw std::invalid_argument("even-power sums form relations only in B, C and D");
            }
            std::vector<Term> terms;
            for_each_composition(n - index + 1, index, 0, [&](const std::vector<int>& tuple) {
                std::vector<int> exps(static_cast<std::size_t>(n), 0);
                for (int j = 0; j < index; ++j) {
                    exps[static_cast<std::size_t>(n - index + j)] =
                        2 * tuple[static_cast<std::size_t>(j)];
                }
                terms.push_back({Rational(1), Monomial::from_exponents(std::move(exps))});
            });
            return Polynomial::from_terms(n, std::move(terms));
        }
        case RelationKind::odd_sum: {
            if (family != Family::D) {
                throw std::invalid_argument("odd-power sums form relations only in family D");
            }
            std::vector<Term> terms;
            for_each_composition(n, index, 1, [&](const std::vector<int>& tuple) {
                std::vector<int> exps(static_cast<std::size_t>(n), 0);
                for (int j = 0; j < index; ++j) {
                    exps[static_cast<std::size_t>(n - index + j)] =
                        2 * tuple[static_cast<std::size_t>(j)] - 1;
                }
                terms.push_back({Rational(1), Monomial::from_exponents(std::move(exps))});
            });
            return Polynomial::from_terms(n, std::move(terms));
        }
    }
    throw std::logic_error("unreachable relation kind");
}

std::vector<Polynomial> relation_family_all(const SpacePresentation& p) {
    std::vector<Polynomial> out;
    switch (p.family()) {
        case Family::A:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back(relation_family(p, i, RelationKind::complete_sum));
            }
            return out;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back(relation_family(p, i, RelationKind::even_sum));
            }
            return out;
        case Family::D:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back(relation_family(p, i, RelationKind::even_sum));
            }
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back(relation_family(p, i, RelationKind::odd_sum));
            }
            return out;
        case Family::G2: {
            out = p.ideal_generators();  // x^2 + 3xy + 3y^2 and x^6
            out.push_back(Polynomial::from_terms(2, {{Rational(1), Monomial{0, 6}}}));
            return out;
        }
        case Family::custom:
            throw std::invalid_argument("custom presentations carry no distinguished relations");
    }
    throw std::logic_error("unreachable family");
}

std::vector<Monomial> expected_basis(const SpacePresentation& p) {
    if (!p.pattern()) {
        throw std::invalid_argument("presentation carries no basis pattern");
    }
    const BasisPattern& pattern = *p.pattern();
    int arity = p.arity();
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    while (true) {
        bool keep = true;
        if (pattern.product_condition) {
            for (int v = 0; v < arity && keep; ++v) {
                if (exps[static_cast<std::size_t>(v)] != pattern.bounds[static_cast<std::size_t>(v)]) {
                    continue;
                }
                bool some_later_zero = false;
                for (int w = v + 1; w < arity; ++w) {
                    if (exps[static_cast<std::size_t>(w)] == 0) {
                        some_later_zero = true;
                        break;
                    }
                }
                keep = some_later_zero;
            }
        }
        if (keep) out.push_back(Monomial::from_exponents(exps));
        int v = arity - 1;
        while (v >= 0 &&
               exps[static_cast<std::size_t>(v)] == pattern.bounds[static_cast<std::size_t>(v)]) {
            exps[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
        ++exps[static_cast<std::size_t>(v)];
    }
    const MonomialOrder& order = p.order();
    std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return order.less(a, b);
    });
    return out;
}

std::int64_t weyl_order(Family family, int rank) {
    if (rank < 1 || rank > 20) throw std::invalid_argument("rank out of range for Weyl order");
    auto factorial = [](int n) {
        std::int64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (family) {
        case Family::A: return factorial(rank + 1);
        case Family::B:
        case Family::C: return (std::int64_t{1} << rank) * factorial(rank);
        case Family::D:
            if (rank < 2) throw std::invalid_argument("family D needs rank at least 2");
            return (std::int64_t{1} << (rank - 1)) * factorial(rank);
        case Family::G2:
            if (rank != 2) throw std::invalid_argument("G2 has rank 2");
            return 12;
        case Family::custom:
            throw std::invalid_argument("custom presentations have no Weyl order formula");
    }
    throw std::logic_error("unreachable family");
}

PoincarePolynomial poincare_from_invariant_degrees(std::vector<int> degrees_g,
                                                   std::vector<int> degrees_h,
                                                   std::vector<int> unmatched_degrees_g) {
    for (int d : degrees_g) {
        if (d < 1) throw std::invalid_argument("invariant degrees must be positive");
    }
    for (int d : degrees_h) {
        if (d < 1) throw std::invalid_argument("invariant degrees must be positive");
    }
    std::vector<int> matched = degrees_g;
    for (int u : unmatched_degrees_g) {
        auto it = std::find(matched.begin(), matched.end(), u);
        if (it == matched.end()) {
            throw std::invalid_argument("unmatched degree " + std::to_string(u) +
                                        " is not among the ambient invariant degrees");
        }
        matched.erase(it);
    }
    if (matched.size() != degrees_h.size()) {
        throw std::invalid_argument(
            "invariant degree counts do not line up after removing unmatched degrees");
    }
    PoincarePolynomial numerator = PoincarePolynomial::one();
    for (int k : matched) numerator = numerator * PoincarePolynomial::one_minus_t_power(2 * k);
    PoincarePolynomial denominator = PoincarePolynomial::one();
    for (int l : degrees_h) denominator = denominator * PoincarePolynomial::one_minus_t_power(2 * l);
    auto quotient = PoincarePolynomial::divide_exact(numerator, denominator);
    if (!quotient) {
        throw std::invalid_argument("invariant degrees do not divide exactly");
    }
    PoincarePolynomial result = *quotient;
    for (int u : unmatched_degrees_g) {
        result = result * PoincarePolynomial::one_plus_t_power(2 * u - 1);
    }
    if (result.has_negative_coefficient()) {
        throw std::invalid_argument("invariant degrees produce negative coefficients");
    }
    return result;
}

bool cartan_type_check(const RestrictionData& r, const MonomialOrder& order) {
    int m = static_cast<int>(r.images.size());
    if (r.split_rank < 0 || r.split_rank > m) {
        throw std::invalid_argument("split rank must lie between 0 and the number of images");
    }
    int s = order.arity();
    for (const Polynomial& f : r.images) {
        if (f.arity() != s) {
            throw std::invalid_argument("image arity does not match order arity");
        }
    }
    int k = r.split_rank;
    if (k == m) return true;  // no images beyond the split

    // The quotients in the membership certificate must themselves be
    // polynomial expressions in the images (the ambient ring is the invariant
    // subalgebra, not the whole polynomial ring). Tag each image with a fresh
    // variable z_i, eliminate the original variables from <z_i - f_i> to get
    // the relation ideal P among the images, and test membership of the late
    // tags in <z_1..z_k> + P inside the tag ring Q[z]/P ~ Q[images].
    int big_arity = s + m;
    MonomialOrder elimination = MonomialOrder::lex(big_arity);
    std::vector<Polynomial> tagged;
    tagged.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<Term> terms;
        terms.reserve(r.images[static_cast<std::size_t>(i)].terms().size() + 1);
        for (const Term& t : r.images[static_cast<std::size_t>(i)].terms()) {
            std::vector<int> exps(static_cast<std::size_t>(big_arity), 0);
            for (int v = 0; v < s; ++v) exps[static_cast<std::size_t>(v)] = t.mono.exponent(v);
            terms.push_back({t.coeff, Monomial::from_exponents(std::move(exps))});
        }
        std::vector<int> tag(static_cast<std::size_t>(big_arity), 0);
        tag[static_cast<std::size_t>(s + i)] = 1;
        terms.push_back({Rational(-1), Monomial::from_exponents(std::move(tag))});
        tagged.push_back(Polynomial::from_terms(big_arity, std::move(terms)));
    }
    GroebnerBasis graph = buchberger(tagged, elimination);

    // Relation ideal: basis elements free of the original variables, read as
    // polynomials in the tags alone.
    std::vector<Polynomial> z_ring_gens;
    for (const Polynomial& g : graph.generators()) {
        bool pure_z = true;
        for (const Term& t : g.terms()) {
            for (int v = 0; v < s && pure_z; ++v) {
                if (t.mono.exponent(v) != 0) pure_z = false;
            }
            if (!pure_z) break;
        }
        if (!pure_z) continue;
        std::vector<Term> terms;
        terms.reserve(g.terms().size());
        for (const Term& t : g.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(m), 0);
            for (int i = 0; i < m; ++i) {
                exps[static_cast<std::size_t>(i)] = t.mono.exponent(s + i);
            }
            terms.push_back({t.coeff, Monomial::from_exponents(std::move(exps))});
        }
        z_ring_gens.push_back(Polynomial::from_terms(m, std::move(terms)));
    }
    for (int i = 0; i < k; ++i) {
        z_ring_gens.push_back(Polynomial::variable(m, i));
    }
    if (z_ring_gens.empty()) return false;  // independent images, nothing to generate from
    GroebnerBasis membership = buchberger(z_ring_gens, MonomialOrder::lex(m));
    for (int j = k; j < m; ++j) {
        if (!is_in_ideal(Polynomial::variable(m, j), membership)) return false;
    }
    return true;
}

PoincarePolynomial cartan_model_poincare(const CartanModel& model) {
    PoincarePolynomial series = model.polynomial_part.quotient().poincare_polynomial();
    for (int d : model.exterior_degrees) {
        if (d < 1 || d % 2 == 0) {
            throw std::invalid_argument("exterior generator degrees must be odd");
        }
        series = series * PoincarePolynomial::one_plus_t_power(d);
    }
    return series;
}

bool fibration_factorization_check(const PoincarePolynomial& total, const PoincarePolynomial& base,
                                   const PoincarePolynomial& fiber) {
    return total == base * fiber;
}

}  // namespace coflag
