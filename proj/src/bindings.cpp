// Python bindings for the exact-cohomology toolkit: polynomials over the
// rationals, reduced Groebner bases, quotient rings, the built-in space
// presentations, and the structural verifier. Thin by design — heavy state
// lives in the C++ classes, conversions stay at strings, ints and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coflag/groebner.hpp"
#include "coflag/poly_text.hpp"
#include "coflag/quotient.hpp"
#include "coflag/serialization.hpp"
#include "coflag/spaces.hpp"
#include "coflag/verify.hpp"

namespace py = pybind11;
using namespace coflag;

namespace {

RelationKind relation_kind_from_string(const std::string& name) {
    if (name == "complete_sum") return RelationKind::complete_sum;
    if (name == "even_sum") return RelationKind::even_sum;
    if (name == "odd_sum") return RelationKind::odd_sum;
    throw std::invalid_argument("unknown relation kind '" + name +
                                "' (expected complete_sum, even_sum or odd_sum)");
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& monomials,
                                          const std::vector<std::string>& names) {
    std::vector<std::string> out;
    out.reserve(monomials.size());
    for (const Monomial& m : monomials) {
        out.push_back(names.empty() ? to_string(m) : to_string(m, names));
    }
    return out;
}

py::list claims_to_list(const VerificationReport& report) {
    py::list out;
    for (const Claim& c : report.claims()) {
        py::dict entry;
        entry["id"] = c.id;
        entry["statement"] = c.statement;
        entry["passed"] = c.passed;
        entry["witness"] = c.witness;
        out.append(std::move(entry));
    }
    return out;
}

PoincarePolynomial series_from_coefficients(const std::vector<std::int64_t>& coeffs) {
    return PoincarePolynomial::from_coefficients(coeffs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact symbolic computation in cohomology presentations of flag "
        "manifolds: rational-coefficient polynomials, reduced Groebner bases, "
        "finite-dimensional quotient rings, and a structural verifier.";

    py::class_<Polynomial>(m, "Polynomial",
                           "Sparse multivariate polynomial with exact rational "
                           "coefficients, kept in a canonical normal form.")
        .def(py::init([](const std::string& text, int arity) {
                 return parse_polynomial(text, arity);
             }),
             py::arg("text"), py::arg("arity"),
             "Parse polynomial text in variables x1..x<arity>.")
        .def(py::init([](const std::string& text, const std::vector<std::string>& names) {
                 return parse_polynomial(text, static_cast<int>(names.size()), names);
             }),
             py::arg("text"), py::arg("variables"),
             "Parse polynomial text in the named variables.")
        .def_property_readonly("arity", &Polynomial::arity)
        .def("is_zero", &Polynomial::is_zero)
        .def("total_degree", &Polynomial::total_degree)
        .def("is_homogeneous", &Polynomial::is_homogeneous)
        .def(
            "to_text",
            [](const Polynomial& p, const std::vector<std::string>& names) {
                return names.empty() ? to_string(p) : to_string(p, names);
            },
            py::arg("variables") = std::vector<std::string>{},
            "Canonical text form, optionally with custom variable names.")
        .def("__str__", [](const Polynomial& p) { return to_string(p); })
        .def("__repr__",
             [](const Polynomial& p) {
                 return "Polynomial('" + to_string(p) + "', " + std::to_string(p.arity()) + ")";
             })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__eq__",
             [](const Polynomial& a, const Polynomial& b) { return a == b; },
             py::is_operator())
        .def("__ne__",
             [](const Polynomial& a, const Polynomial& b) { return !(a == b); },
             py::is_operator());

    py::class_<MonomialOrder>(m, "MonomialOrder",
                              "Monomial order: lex, graded lex or graded reverse "
                              "lex with a variable-significance permutation.")
        .def_static("lex", &MonomialOrder::lex, py::arg("arity"))
        .def_static("grlex", &MonomialOrder::grlex, py::arg("arity"))
        .def_static("grevlex", &MonomialOrder::grevlex, py::arg("arity"))
        .def_property_readonly("arity", &MonomialOrder::arity)
        .def_property_readonly("kind",
                               [](const MonomialOrder& o) { return to_string(o.kind()); })
        .def("__repr__", [](const MonomialOrder& o) {
            return "MonomialOrder(" + to_string(o.kind()) + ", arity=" +
                   std::to_string(o.arity()) + ")";
        });

    m.def(
        "groebner_basis",
        [](const std::vector<Polynomial>& generators, const MonomialOrder& order) {
            return buchberger(generators, order).generators();
        },
        py::arg("generators"), py::arg("order"),
        "The unique reduced Groebner basis, sorted by ascending leading monomial.");

    m.def(
        "normal_form",
        [](const Polynomial& f, const std::vector<Polynomial>& generators,
           const MonomialOrder& order) { return normal_form(f, buchberger(generators, order)); },
        py::arg("f"), py::arg("generators"), py::arg("order"),
        "Normal form of f modulo the ideal the generators span.");

    m.def(
        "is_in_ideal",
        [](const Polynomial& f, const std::vector<Polynomial>& generators,
           const MonomialOrder& order) { return is_in_ideal(f, buchberger(generators, order)); },
        py::arg("f"), py::arg("generators"), py::arg("order"),
        "Exact ideal-membership test.");

    m.def(
        "is_groebner_basis",
        [](const std::vector<Polynomial>& generators, const MonomialOrder& order) {
            return is_groebner_basis(generators, order);
        },
        py::arg("generators"), py::arg("order"),
        "Buchberger's criterion: do all S-polynomials reduce to zero?");

    py::class_<QuotientRing>(m, "QuotientRing",
                             "Polynomial ring modulo an ideal, presented through "
                             "a reduced Groebner basis; cosets are normal forms.")
        .def(py::init([](const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         int grading_weight) {
                 return QuotientRing::from_generators(generators, order, grading_weight);
             }),
             py::arg("generators"), py::arg("order"), py::arg("grading_weight") = 2)
        .def("is_finite_dimensional", &QuotientRing::is_finite_dimensional)
        .def("dimension", &QuotientRing::dimension)
        .def(
            "groebner_basis",
            [](const QuotientRing& q) { return q.basis().generators(); },
            "The reduced Groebner basis backing the quotient.")
        .def(
            "standard_monomials",
            [](const QuotientRing& q, const std::vector<std::string>& names) {
                return monomial_strings(q.standard_monomials(), names);
            },
            py::arg("variables") = std::vector<std::string>{},
            "The monomial basis of the quotient, as text.")
        .def(
            "poincare",
            [](const QuotientRing& q) { return q.poincare_polynomial().to_string(); },
            "Graded dimension count as a polynomial in t, as text.")
        .def(
            "poincare_coefficients",
            [](const QuotientRing& q) { return q.poincare_polynomial().coefficients(); },
            "Graded dimension count as a dense coefficient list.")
        .def("reduce", &QuotientRing::reduce, py::arg("f"),
             "Canonical coset representative of f.")
        .def("coset_mul", &QuotientRing::coset_mul, py::arg("f"), py::arg("g"),
             "Product of two cosets, reduced.")
        .def(
            "top_class",
            [](const QuotientRing& q, const std::vector<std::string>& names) {
                auto [degree, monomials] = q.top_class();
                return py::make_tuple(degree, monomial_strings(monomials, names));
            },
            py::arg("variables") = std::vector<std::string>{},
            "Top graded degree and the standard monomials sitting there.");

    py::class_<SpacePresentation>(m, "SpacePresentation",
                                  "A cohomology presentation: graded polynomial "
                                  "ring, relation ideal, and the numerical data "
                                  "of the underlying space.")
        .def_property_readonly("name", &SpacePresentation::name)
        .def_property_readonly("family",
                               [](const SpacePresentation& p) { return to_string(p.family()); })
        .def_property_readonly("rank", &SpacePresentation::rank)
        .def_property_readonly("arity", &SpacePresentation::arity)
        .def_property_readonly("dimension", &SpacePresentation::dimension)
        .def_property_readonly("variable_names", &SpacePresentation::variable_names)
        .def_property_readonly("degrees_G", &SpacePresentation::degrees_g)
        .def_property_readonly("degrees_H", &SpacePresentation::degrees_h)
        .def_property_readonly("exterior_degrees", &SpacePresentation::exterior_degrees)
        .def_property_readonly("basis_bounds",
                               [](const SpacePresentation& p) -> std::optional<std::vector<int>> {
                                   if (!p.pattern()) return std::nullopt;
                                   return p.pattern()->bounds;
                               })
        .def("ideal_generators",
             [](const SpacePresentation& p) { return p.ideal_generators(); })
        .def("generator_strings",
             [](const SpacePresentation& p) {
                 std::vector<std::string> out;
                 for (const Polynomial& g : p.ideal_generators()) {
                     out.push_back(to_string(g, p.variable_names()));
                 }
                 return out;
             })
        .def("order", &SpacePresentation::order)
        .def("quotient", &SpacePresentation::quotient)
        .def("to_json",
             [](const SpacePresentation& p) { return presentation_to_json(p).dump(2); })
        .def("__repr__", [](const SpacePresentation& p) {
            return "SpacePresentation(" + p.name() + ")";
        });

    m.def(
        "flag_presentation",
        [](const std::string& family, int rank) {
            return flag_presentation(family_from_string(family), rank);
        },
        py::arg("family"), py::arg("rank"),
        "The full flag manifold of the given family ('A', 'B', 'C', 'D') and rank.");

    m.def("g2_flag_presentation", &g2_flag_presentation,
          "The exceptional rank-2 flag manifold.");

    m.def("load_presentation", &load_presentation, py::arg("path"),
          "Load a presentation from a JSON file.");

    m.def(
        "presentation_from_json",
        [](const std::string& text) { return presentation_from_json(Json::parse(text)); },
        py::arg("text"), "Parse a presentation from a JSON string.");

    m.def(
        "relation_family",
        [](const SpacePresentation& p, int index, const std::string& kind) {
            return relation_family(p, index, relation_kind_from_string(kind));
        },
        py::arg("presentation"), py::arg("index"), py::arg("kind"),
        "Distinguished ideal member (kind: complete_sum, even_sum or odd_sum).");

    m.def("relation_family_all", &relation_family_all, py::arg("presentation"),
          "Every distinguished ideal member, in the family's fixed sequence.");

    m.def(
        "expected_basis",
        [](const SpacePresentation& p) {
            return monomial_strings(expected_basis(p), p.variable_names());
        },
        py::arg("presentation"),
        "The predicted monomial basis from the staircase pattern, as text.");

    m.def(
        "weyl_order",
        [](const std::string& family, int rank) {
            return weyl_order(family_from_string(family), rank);
        },
        py::arg("family"), py::arg("rank"),
        "Reflection-group order ratio |W(G)| / |W(T)| for the family.");

    m.def(
        "poincare_from_invariant_degrees",
        [](std::vector<int> degrees_g, std::vector<int> degrees_h,
           std::vector<int> unmatched_degrees_g) {
            return poincare_from_invariant_degrees(std::move(degrees_g), std::move(degrees_h),
                                                   std::move(unmatched_degrees_g))
                .coefficients();
        },
        py::arg("degrees_G"), py::arg("degrees_H"),
        py::arg("unmatched_degrees_G") = std::vector<int>{},
        "Closed-form graded count from invariant degrees, as a coefficient list.");

    m.def(
        "cartan_model_poincare",
        [](const SpacePresentation& p, const std::vector<int>& exterior_degrees) {
            return cartan_model_poincare(CartanModel{p, exterior_degrees}).coefficients();
        },
        py::arg("presentation"), py::arg("exterior_degrees"),
        "Graded count of quotient x exterior algebra, as a coefficient list.");

    m.def(
        "fibration_factorization_check",
        [](const std::vector<std::int64_t>& total, const std::vector<std::int64_t>& base,
           const std::vector<std::int64_t>& fiber) {
            return fibration_factorization_check(series_from_coefficients(total),
                                                 series_from_coefficients(base),
                                                 series_from_coefficients(fiber));
        },
        py::arg("total"), py::arg("base"), py::arg("fiber"),
        "Does total equal base * fiber as graded coefficient lists?");

    m.def(
        "cartan_type_check",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& images,
           int split_rank) {
            RestrictionData data;
            data.variable_names = variables;
            int arity = static_cast<int>(variables.size());
            for (const std::string& text : images) {
                data.images.push_back(parse_polynomial(text, arity, variables));
            }
            data.split_rank = split_rank;
            return cartan_type_check(
                data, MonomialOrder::lex(static_cast<int>(variables.size())));
        },
        py::arg("variables"), py::arg("images"), py::arg("split_rank"),
        "Do the images beyond split_rank lie in the ideal generated by the "
        "first split_rank images, inside the subalgebra all images generate?");

    m.def(
        "verify_space",
        [](const SpacePresentation& p, int degree_cap) {
            return claims_to_list(verify_space(p, degree_cap));
        },
        py::arg("presentation"), py::arg("degree_cap") = 0,
        "Run every applicable structural check; returns one dict per claim.");

    m.def(
        "verify_model",
        [](const SpacePresentation& p, const std::vector<int>& exterior_degrees,
           int expected_dimension) {
            return claims_to_list(verify_model(CartanModel{p, exterior_degrees},
                                               expected_dimension));
        },
        py::arg("presentation"), py::arg("exterior_degrees"), py::arg("expected_dimension"),
        "Plausibility checks for a quotient x exterior product model.");
}
