#include "coflag/verify.hpp"

#include <algorithm>
#include <utility>

#include "coflag/poly_text.hpp"
#include "coflag/symfun.hpp"

namespace coflag {

bool VerificationReport::all_passed() const {
    return std::all_of(claims_.begin(), claims_.end(), [](const Claim& c) { return c.passed; });
}

std::size_t VerificationReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(claims_.begin(), claims_.end(), [](const Claim& c) { return !c.passed; }));
}

void VerificationReport::add(std::string id, std::string statement, bool passed,
                             std::string witness) {
    claims_.push_back({std::move(id), std::move(statement), passed,
                       passed ? std::string{} : std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
    claims_.insert(claims_.end(), other.claims_.begin(), other.claims_.end());
}

namespace {

std::string tag(const SpacePresentation& p) {
    if (p.family() == Family::custom) return p.name();
    if (p.family() == Family::G2) return "G2";
    return to_string(p.family()) + std::to_string(p.rank());
}

struct LabeledRelation {
    std::string label;
    Polynomial poly;
};

std::vector<LabeledRelation> labeled_relations(const SpacePresentation& p) {
    std::vector<LabeledRelation> out;
    switch (p.family()) {
        case Family::A:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back({"complete-sum/p=" + std::to_string(i),
                               relation_family(p, i, RelationKind::complete_sum)});
            }
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back({"even-sum/p=" + std::to_string(i),
                               relation_family(p, i, RelationKind::even_sum)});
            }
            break;
        case Family::D:
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back({"even-sum/p=" + std::to_string(i),
                               relation_family(p, i, RelationKind::even_sum)});
            }
            for (int i = 1; i <= p.rank(); ++i) {
                out.push_back({"odd-sum/p=" + std::to_string(i),
                               relation_family(p, i, RelationKind::odd_sum)});
            }
            break;
        case Family::G2: {
            std::vector<Polynomial> rels = relation_family_all(p);
            out.push_back({"quadratic", rels[0]});
            out.push_back({"sextic-x", rels[1]});
            out.push_back({"sextic-y", rels[2]});
            break;
        }
        case Family::custom:
            throw std::invalid_argument("custom presentations carry no distinguished relations");
    }
    return out;
}

Polynomial embed_shift(const Polynomial& f, int new_arity, int shift) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(new_arity), 0);
        for (int v = 0; v < f.arity(); ++v) {
            exps[static_cast<std::size_t>(v + shift)] = t.mono.exponent(v);
        }
        terms.push_back({t.coeff, Monomial::from_exponents(std::move(exps))});
    }
    return Polynomial::from_terms(new_arity, std::move(terms));
}

std::string monomial_list(const std::vector<Monomial>& monomials,
                          const std::vector<std::string>& names, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < monomials.size() && i < limit; ++i) {
        if (!out.empty()) out += ", ";
        out += to_string(monomials[i], names);
    }
    if (monomials.size() > limit) out += ", ... (" + std::to_string(monomials.size()) + " total)";
    return out;
}

Monomial designated_top_monomial(const SpacePresentation& p) {
    int n = p.rank();
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    switch (p.family()) {
        case Family::A:
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = i + 1;
            break;
        case Family::B:
        case Family::C:
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = 2 * i + 1;
            break;
        case Family::D:
            for (int i = 1; i < n; ++i) exps[static_cast<std::size_t>(i)] = 2 * i;
            break;
        case Family::G2:
            exps = {1, 5};
            break;
        case Family::custom:
            throw std::invalid_argument("custom presentations have no designated top monomial");
    }
    return Monomial::from_exponents(std::move(exps));
}

}  // namespace

VerificationReport verify_relations_in_ideal(const SpacePresentation& p) {
    VerificationReport report;
    QuotientRing q = p.quotient();
    const auto& names = p.variable_names();
    for (const LabeledRelation& rel : labeled_relations(p)) {
        Polynomial nf = q.reduce(rel.poly);
        report.add(tag(p) + "/relations/" + rel.label,
                   "the relation " + to_string(rel.poly, names) +
                       " reduces to zero modulo the presentation ideal",
                   nf.is_zero(), "normal form: " + to_string(nf, names));
    }
    return report;
}

VerificationReport verify_relations_are_groebner(const SpacePresentation& p) {
    VerificationReport report;
    const std::string prefix = tag(p) + "/groebner/";
    const auto& names = p.variable_names();
    const MonomialOrder& order = p.order();
    std::vector<LabeledRelation> relations = labeled_relations(p);
    std::vector<Polynomial> family;
    family.reserve(relations.size());
    for (const LabeledRelation& r : relations) family.push_back(r.poly);

    for (const LabeledRelation& r : relations) {
        Rational lc = r.poly.is_zero() ? Rational(0) : r.poly.leading_term(order).coeff;
        report.add(prefix + "monic/" + r.label,
                   "the relation " + to_string(r.poly, names) +
                       " is monic under the presentation order",
                   lc == 1, "leading coefficient: " + to_string(lc));
    }

    {
        bool all_zero = true;
        std::string witness;
        for (std::size_t i = 0; i < family.size() && all_zero; ++i) {
            for (std::size_t j = i + 1; j < family.size() && all_zero; ++j) {
                const Monomial& a = family[i].leading_term(order).mono;
                const Monomial& b = family[j].leading_term(order).mono;
                if (a.coprime_with(b)) continue;
                Polynomial rem = divide(spoly(family[i], family[j], order), family, order).remainder;
                if (!rem.is_zero()) {
                    all_zero = false;
                    witness = "the pair (" + relations[i].label + ", " + relations[j].label +
                              ") leaves remainder " + to_string(rem, names);
                }
            }
        }
        report.add(prefix + "s-polynomials",
                   "every S-polynomial of the relation family reduces to zero modulo the family",
                   all_zero, witness);
    }

    GroebnerBasis family_basis = buchberger(family, order);
    for (std::size_t k = 0; k < p.ideal_generators().size(); ++k) {
        const Polynomial& g = p.ideal_generators()[k];
        Polynomial nf = g.is_zero() ? g : normal_form(g, family_basis);
        report.add(prefix + "generators-contained/g" + std::to_string(k + 1),
                   "presentation generator " + to_string(g, names) +
                       " lies in the ideal generated by the relation family",
                   nf.is_zero(), "normal form: " + to_string(nf, names));
    }

    QuotientRing q = p.quotient();
    for (const LabeledRelation& r : relations) {
        Polynomial nf = q.reduce(r.poly);
        report.add(prefix + "family-in-ideal/" + r.label,
                   "the relation " + to_string(r.poly, names) +
                       " lies in the presentation ideal",
                   nf.is_zero(), "normal form: " + to_string(nf, names));
    }

    {
        bool contained = true;
        std::string witness;
        for (const Polynomial& g : q.basis().generators()) {
            if (std::find(family.begin(), family.end(), g) == family.end()) {
                contained = false;
                witness = "reduced-basis element " + to_string(g, names) +
                          " is not literally a family member";
                break;
            }
        }
        report.add(prefix + "reduced-basis-members",
                   "every element of the reduced basis of the presentation ideal is literally a "
                   "member of the relation family",
                   contained, witness);
    }

    if (p.family() == Family::A || p.family() == Family::B || p.family() == Family::C) {
        auto by_lm = [&order](std::vector<Polynomial> v) {
            std::sort(v.begin(), v.end(), [&order](const Polynomial& a, const Polynomial& b) {
                return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
            });
            return v;
        };
        bool equal = by_lm(family) == q.basis().generators();
        report.add(prefix + "family-equals-reduced-basis",
                   "the relation family coincides with the reduced basis of the presentation "
                   "ideal, element by element",
                   equal, "the two sets differ");
    }

    if (p.family() == Family::A) {
        int N = p.rank() + 1;
        std::vector<Polynomial> full;
        VariableSubset all = VariableSubset::all(N);
        for (int j = 1; j <= N; ++j) full.push_back(elementary_sigma(j, all));
        GroebnerBasis full_basis = buchberger(full, MonomialOrder::lex(N));
        std::vector<Polynomial> expected;
        for (const Polynomial& g : q.basis().generators()) {
            expected.push_back(embed_shift(g, N, 1));
        }
        Polynomial linear = Polynomial::zero(N);
        for (int v = 0; v < N; ++v) linear = linear + Polynomial::variable(N, v);
        expected.push_back(linear);
        report.add(prefix + "one-more-variable",
                   "the symmetric-function ideal in one more variable has reduced basis "
                   "{sum of all variables} plus the lifted reduced basis of the presentation",
                   full_basis.generators() == expected,
                   "the reduced bases differ");
    }
    return report;
}

VerificationReport verify_basis(const SpacePresentation& p) {
    VerificationReport report;
    const std::string prefix = tag(p) + "/basis/";
    const auto& names = p.variable_names();
    QuotientRing q = p.quotient();
    std::vector<Monomial> predicted = expected_basis(p);
    std::vector<Monomial> actual = q.standard_monomials();

    bool equal = predicted == actual;
    std::string witness;
    if (!equal) {
        std::vector<Monomial> missing, extra;
        for (const Monomial& m : predicted) {
            if (std::find(actual.begin(), actual.end(), m) == actual.end()) missing.push_back(m);
        }
        for (const Monomial& m : actual) {
            if (std::find(predicted.begin(), predicted.end(), m) == predicted.end()) {
                extra.push_back(m);
            }
        }
        witness = "predicted " + std::to_string(predicted.size()) + ", computed " +
                  std::to_string(actual.size());
        if (!missing.empty()) witness += "; predicted but absent: " + monomial_list(missing, names);
        if (!extra.empty()) witness += "; computed but unpredicted: " + monomial_list(extra, names);
    }
    report.add(prefix + "set-equality",
               "the predicted monomial basis equals the standard monomials of the quotient",
               equal, witness);

    if (p.family() != Family::custom) {
        std::int64_t expected_count = weyl_order(p.family(), p.rank());
        report.add(prefix + "weyl-count",
                   "the basis size equals the Weyl-group order ratio " +
                       std::to_string(expected_count),
                   static_cast<std::int64_t>(actual.size()) == expected_count,
                   "computed " + std::to_string(actual.size()));
    }
    return report;
}

VerificationReport verify_vanishing_identities(const SpacePresentation& p, int degree_cap) {
    VerificationReport report;
    const std::string prefix = tag(p) + "/vanishing/";
    const auto& names = p.variable_names();
    int n = p.rank();
    if (p.family() == Family::A) {
        if (degree_cap <= 0) degree_cap = 2 * n + 2;
        QuotientRing q = p.quotient();
        for (int k = 2; k <= n + 1; ++k) {
            // Complete homogeneous sums in the trailing block x_{k-1}..x_n
            // vanish from degree k on.
            VariableSubset block = VariableSubset::range(n, k - 2, n - 1);
            for (int m = k; m <= degree_cap; ++m) {
                Polynomial h = monomial_sum(m, block);
                Polynomial nf = q.reduce(h);
                report.add(prefix + "k=" + std::to_string(k) + "/m=" + std::to_string(m),
                           "the degree-" + std::to_string(m) +
                               " complete sum in the trailing block starting at " +
                               names[static_cast<std::size_t>(k - 2)] +
                               " reduces to zero modulo the presentation ideal",
                           nf.is_zero(), "normal form: " + to_string(nf, names));
            }
        }
    } else if (p.family() == Family::D) {
        QuotientRing q = p.quotient();
        for (int k = 1; k <= n; ++k) {
            // x_k^{2k-1} times x_j^{2j-3} over the later variables.
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            exps[static_cast<std::size_t>(k - 1)] = 2 * k - 1;
            for (int j = k + 1; j <= n; ++j) exps[static_cast<std::size_t>(j - 1)] = 2 * j - 3;
            Polynomial mono = Polynomial::from_terms(
                n, {{Rational(1), Monomial::from_exponents(std::move(exps))}});
            Polynomial nf = q.reduce(mono);
            report.add(prefix + "k=" + std::to_string(k),
                       "the staircase product " + to_string(mono, names) +
                           " reduces to zero modulo the presentation ideal",
                       nf.is_zero(), "normal form: " + to_string(nf, names));
        }
    }
    return report;
}

VerificationReport verify_top_class(const SpacePresentation& p) {
    VerificationReport report;
    const std::string prefix = tag(p) + "/top-class/";
    const auto& names = p.variable_names();
    QuotientRing q = p.quotient();
    auto [top_degree, top_monomials] = q.top_class();

    int exterior_sum = 0;
    for (int d : p.exterior_degrees()) exterior_sum += d;
    int expected_top = p.dimension() - exterior_sum;
    report.add(prefix + "degree",
               "the top graded degree of the quotient equals " + std::to_string(expected_top) +
                   " (manifold dimension minus exterior-generator degrees)",
               top_degree == expected_top, "computed degree " + std::to_string(top_degree));

    if (p.family() == Family::custom) return report;

    Monomial designated = designated_top_monomial(p);
    Polynomial as_poly = Polynomial::from_terms(p.arity(), {{Rational(1), designated}});
    Polynomial nf = q.reduce(as_poly);
    report.add(prefix + "nonzero",
               "the designated monomial " + to_string(designated, names) +
                   " is nonzero in the quotient",
               !nf.is_zero(), "it reduces to zero");

    bool spans = top_monomials.size() == 1 && top_monomials.front() == designated;
    report.add(prefix + "spans",
               "the top component is one-dimensional, spanned by " + to_string(designated, names),
               spans, "computed top monomials: " + monomial_list(top_monomials, names));
    return report;
}

VerificationReport verify_poincare_consistency(const SpacePresentation& p) {
    VerificationReport report;
    const std::string prefix = tag(p) + "/poincare/";
    QuotientRing q = p.quotient();
    PoincarePolynomial series = q.poincare_polynomial();
    for (int d : p.exterior_degrees()) {
        series = series * PoincarePolynomial::one_plus_t_power(d);
    }
    std::vector<int> unmatched;
    for (int d : p.exterior_degrees()) unmatched.push_back((d + 1) / 2);
    PoincarePolynomial closed =
        poincare_from_invariant_degrees(p.degrees_g(), p.degrees_h(), unmatched);

    report.add(prefix + "closed-form",
               "the graded count of the quotient equals the closed form from invariant degrees",
               series == closed,
               "quotient: " + series.to_string() + "; closed form: " + closed.to_string());
    report.add(prefix + "palindromic", "the coefficient sequence is palindromic",
               series.is_palindromic(), series.to_string());
    report.add(prefix + "top-degree",
               "the count peaks in degree equal to the manifold dimension " +
                   std::to_string(p.dimension()),
               series.degree() == p.dimension(),
               "computed top degree " + std::to_string(series.degree()));
    return report;
}

VerificationReport verify_model(const CartanModel& model, int expected_dimension) {
    VerificationReport report;
    const std::string prefix = model.polynomial_part.name() + "/model/";
    PoincarePolynomial series = cartan_model_poincare(model);
    report.add(prefix + "top-degree",
               "the model's count peaks in degree " + std::to_string(expected_dimension),
               series.degree() == expected_dimension,
               "computed top degree " + std::to_string(series.degree()));
    report.add(prefix + "palindromic", "the model's coefficient sequence is palindromic",
               series.is_palindromic(), series.to_string());
    report.add(prefix + "connected", "the model's count starts with constant term 1",
               series.coefficient(0) == 1, series.to_string());
    return report;
}

VerificationReport verify_space(const SpacePresentation& p, int degree_cap) {
    VerificationReport report;
    if (p.family() != Family::custom) {
        report.merge(verify_relations_in_ideal(p));
        report.merge(verify_relations_are_groebner(p));
    }
    if (p.pattern()) report.merge(verify_basis(p));
    report.merge(verify_vanishing_identities(p, degree_cap));
    report.merge(verify_top_class(p));
    report.merge(verify_poincare_consistency(p));
    return report;
}

}  // namespace coflag
