#include <doctest.h>

#include <coflag/poly_text.hpp>
#include <coflag/serialization.hpp>
#include <coflag/spaces.hpp>

#include <stdexcept>

using namespace coflag;

namespace {

Polynomial P(const std::string& text, int arity,
             const std::vector<std::string>& names = {}) {
    if (names.empty()) return parse_polynomial(text, arity);
    return parse_polynomial(text, arity, names);
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const Polynomial& p : ps) out.push_back(to_string(p));
    return out;
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const Monomial& m : ms) out.push_back(to_string(m));
    return out;
}

RestrictionData one_variable_restriction(const std::vector<std::string>& images,
                                         int split_rank) {
    RestrictionData r;
    r.variable_names = {"u"};
    for (const std::string& text : images) {
        r.images.push_back(parse_polynomial(text, 1, {"u"}));
    }
    r.split_rank = split_rank;
    return r;
}

}  // namespace

TEST_SUITE("spaces") {

TEST_CASE("family names round-trip") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G2,
                     Family::custom}) {
        CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK(family_from_string("a") == Family::A);
    CHECK(family_from_string("g2") == Family::G2);
    CHECK_THROWS_AS(family_from_string("E8"), std::invalid_argument);
}

TEST_CASE("special-unitary flag presentations") {
    SpacePresentation p = flag_presentation(Family::A, 2);
    CHECK(p.name() == "SU(3)/T^2");
    CHECK(p.rank() == 2);
    CHECK(p.arity() == 2);
    CHECK(p.variable_names() == std::vector<std::string>{"x1", "x2"});
    CHECK(poly_strings(p.ideal_generators()) ==
          std::vector<std::string>{"-x1^2 - x1*x2 - x2^2", "-x1^2*x2 - x1*x2^2"});
    CHECK(p.degrees_g() == std::vector<int>{2, 3});
    CHECK(p.degrees_h() == std::vector<int>{1, 1});
    CHECK(p.exterior_degrees().empty());
    CHECK(p.dimension() == 6);
    REQUIRE(p.pattern().has_value());
    CHECK(p.pattern()->bounds == std::vector<int>{1, 2});
    CHECK_FALSE(p.pattern()->product_condition);

    SpacePresentation p3 = flag_presentation(Family::A, 3);
    CHECK(p3.name() == "SU(4)/T^3");
    CHECK(p3.dimension() == 12);
    CHECK(p3.degrees_g() == std::vector<int>{2, 3, 4});
    CHECK(p3.quotient().dimension() == 24);
}

TEST_CASE("odd-orthogonal and symplectic flag presentations") {
    SpacePresentation b2 = flag_presentation(Family::B, 2);
    CHECK(b2.name() == "Spin(5)/T^2");
    CHECK(poly_strings(b2.ideal_generators()) ==
          std::vector<std::string>{"x1^2 + x2^2", "x1^2*x2^2"});
    CHECK(b2.degrees_g() == std::vector<int>{2, 4});
    CHECK(b2.dimension() == 8);
    CHECK(b2.pattern()->bounds == std::vector<int>{1, 3});

    SpacePresentation c3 = flag_presentation(Family::C, 3);
    CHECK(c3.name() == "Sp(3)/T^3");
    CHECK(c3.degrees_g() == std::vector<int>{2, 4, 6});
    CHECK(c3.dimension() == 18);
    // B and C share the same polynomial presentation.
    CHECK(poly_strings(c3.ideal_generators()) ==
          poly_strings(flag_presentation(Family::B, 3).ideal_generators()));
}

TEST_CASE("even-orthogonal flag presentations") {
    SpacePresentation d3 = flag_presentation(Family::D, 3);
    CHECK(d3.name() == "Spin(6)/T^3");
    CHECK(poly_strings(d3.ideal_generators()) ==
          std::vector<std::string>{
              "x1^2 + x2^2 + x3^2",
              "x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2",
              "x1*x2*x3"});
    CHECK(d3.degrees_g() == std::vector<int>{2, 4, 3});
    CHECK(d3.dimension() == 12);
    REQUIRE(d3.pattern().has_value());
    CHECK(d3.pattern()->bounds == std::vector<int>{1, 3, 5});
    CHECK(d3.pattern()->product_condition);

    CHECK_THROWS_AS(flag_presentation(Family::D, 1), std::invalid_argument);
    CHECK_THROWS_AS(flag_presentation(Family::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(flag_presentation(Family::custom, 2), std::invalid_argument);
}

TEST_CASE("exceptional rank-2 presentation") {
    SpacePresentation g2 = g2_flag_presentation();
    CHECK(g2.name() == "G2/T^2");
    CHECK(g2.variable_names() == std::vector<std::string>{"x", "y"});
    std::vector<std::string> names = g2.variable_names();
    CHECK(to_string(g2.ideal_generators()[0], names) == "x^2 + 3*x*y + 3*y^2");
    CHECK(to_string(g2.ideal_generators()[1], names) == "x^6");
    CHECK(g2.degrees_g() == std::vector<int>{2, 6});
    CHECK(g2.dimension() == 12);
    CHECK(g2.pattern()->bounds == std::vector<int>{1, 5});
    CHECK(flag_presentation(Family::G2, 2).name() == "G2/T^2");
    CHECK_THROWS_AS(flag_presentation(Family::G2, 3), std::invalid_argument);
}

TEST_CASE("presentation bookkeeping is validated") {
    MonomialOrder lex1 = MonomialOrder::lex(1);
    std::vector<Polynomial> gens = {P("u^2", 1, {"u"})};

    // Valid: dimension = 2*2 - 2*1 - 0.
    SpacePresentation ok("demo", Family::custom, 1, {"u"}, gens, lex1,
                         {2}, {1}, {}, 2, std::nullopt);
    CHECK(ok.quotient().dimension() == 2);

    CHECK_THROWS_AS(SpacePresentation("demo", Family::custom, 1, {"u"}, gens, lex1,
                                      {2}, {1}, {}, 3, std::nullopt),
                    std::invalid_argument);
    // Exterior degree must be odd.
    CHECK_THROWS_AS(SpacePresentation("demo", Family::custom, 1, {"u"}, gens, lex1,
                                      {2}, {1}, {4}, 1, std::nullopt),
                    std::invalid_argument);
    // Exterior degree needs a matching ambient invariant degree.
    CHECK_THROWS_AS(SpacePresentation("demo", Family::custom, 1, {"u"}, gens, lex1,
                                      {2}, {1}, {5}, 1, std::nullopt),
                    std::invalid_argument);
    // Valid exterior generator sourced by the degree-2 invariant.
    SpacePresentation with_ext("demo", Family::custom, 1, {"u"}, gens, lex1,
                               {2, 2}, {1, 2}, {3}, 1, std::nullopt);
    CHECK(with_ext.exterior_degrees() == std::vector<int>{3});
    // Pattern bounds must cover every variable.
    CHECK_THROWS_AS(SpacePresentation("demo", Family::custom, 1, {"u"}, gens, lex1,
                                      {2}, {1}, {}, 2, BasisPattern{{1, 2}, false}),
                    std::invalid_argument);
}

TEST_CASE("distinguished relation members") {
    SpacePresentation a2 = flag_presentation(Family::A, 2);
    CHECK(to_string(relation_family(a2, 2, RelationKind::complete_sum)) ==
          "x1^2 + x1*x2 + x2^2");
    CHECK(to_string(relation_family(a2, 1, RelationKind::complete_sum)) == "x2^3");

    SpacePresentation b2 = flag_presentation(Family::B, 2);
    CHECK(to_string(relation_family(b2, 2, RelationKind::even_sum)) == "x1^2 + x2^2");
    CHECK(to_string(relation_family(b2, 1, RelationKind::even_sum)) == "x2^4");

    SpacePresentation d2 = flag_presentation(Family::D, 2);
    CHECK(to_string(relation_family(d2, 2, RelationKind::odd_sum)) == "x1*x2");
    CHECK(to_string(relation_family(d2, 1, RelationKind::odd_sum)) == "x2^3");
    CHECK(to_string(relation_family(d2, 2, RelationKind::even_sum)) == "x1^2 + x2^2");

    CHECK_THROWS_AS(relation_family(b2, 1, RelationKind::complete_sum),
                    std::invalid_argument);
    CHECK_THROWS_AS(relation_family(a2, 1, RelationKind::odd_sum),
                    std::invalid_argument);
    CHECK_THROWS_AS(relation_family(a2, 0, RelationKind::complete_sum),
                    std::invalid_argument);
    CHECK_THROWS_AS(relation_family(a2, 3, RelationKind::complete_sum),
                    std::invalid_argument);
}

TEST_CASE("full relation sequences") {
    CHECK(poly_strings(relation_family_all(flag_presentation(Family::A, 3))) ==
          std::vector<std::string>{
              "x3^4",
              "x2^3 + x2^2*x3 + x2*x3^2 + x3^3",
              "x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2"});
    CHECK(poly_strings(relation_family_all(flag_presentation(Family::B, 2))) ==
          std::vector<std::string>{"x2^4", "x1^2 + x2^2"});
    CHECK(poly_strings(relation_family_all(flag_presentation(Family::D, 2))) ==
          std::vector<std::string>{"x2^4", "x1^2 + x2^2", "x2^3", "x1*x2"});
    CHECK(poly_strings(relation_family_all(g2_flag_presentation())) ==
          std::vector<std::string>{"x1^2 + 3*x1*x2 + 3*x2^2", "x1^6", "x2^6"});

    SpacePresentation custom("demo", Family::custom, 1, {"u"},
                             {P("u^2", 1, {"u"})}, MonomialOrder::lex(1),
                             {2}, {1}, {}, 2, std::nullopt);
    CHECK_THROWS_AS(relation_family_all(custom), std::invalid_argument);
}

TEST_CASE("predicted bases") {
    CHECK(monomial_strings(expected_basis(flag_presentation(Family::A, 2))) ==
          std::vector<std::string>{"1", "x2", "x1", "x2^2", "x1*x2", "x1*x2^2"});
    CHECK(monomial_strings(expected_basis(flag_presentation(Family::D, 2))) ==
          std::vector<std::string>{"1", "x2", "x1", "x2^2"});
    CHECK(expected_basis(flag_presentation(Family::B, 3)).size() == 48);
    CHECK(expected_basis(flag_presentation(Family::D, 3)).size() == 24);
    CHECK(expected_basis(flag_presentation(Family::A, 3)).size() == 24);
    CHECK(expected_basis(g2_flag_presentation()).size() == 12);

    SpacePresentation no_pattern("demo", Family::custom, 1, {"u"},
                                 {P("u^2", 1, {"u"})}, MonomialOrder::lex(1),
                                 {2}, {1}, {}, 2, std::nullopt);
    CHECK_THROWS_AS(expected_basis(no_pattern), std::invalid_argument);
}

TEST_CASE("order-of-the-quotient formulas") {
    CHECK(weyl_order(Family::A, 2) == 6);
    CHECK(weyl_order(Family::A, 5) == 720);
    CHECK(weyl_order(Family::B, 5) == 3840);
    CHECK(weyl_order(Family::C, 5) == 3840);
    CHECK(weyl_order(Family::D, 4) == 192);
    CHECK(weyl_order(Family::G2, 2) == 12);
    CHECK_THROWS_AS(weyl_order(Family::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(Family::A, 21), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(Family::D, 1), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(Family::G2, 3), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(Family::custom, 2), std::invalid_argument);
}

TEST_CASE("closed-form graded counts from invariant degrees") {
    CHECK(poincare_from_invariant_degrees({2}, {1}, {}).to_string() == "1 + t^2");
    CHECK(poincare_from_invariant_degrees({2, 3}, {1, 1}, {}).to_string() ==
          "1 + 2*t^2 + 2*t^4 + t^6");
    // Rank-split case: one invariant survives as an exterior source.
    CHECK(poincare_from_invariant_degrees({2, 3}, {2}, {3}).to_string() ==
          "1 + t^5");
    CHECK(poincare_from_invariant_degrees({2, 4}, {2, 4}, {}).to_string() == "1");

    CHECK_THROWS_AS(poincare_from_invariant_degrees({3}, {2}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(poincare_from_invariant_degrees({2, 3}, {1}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(poincare_from_invariant_degrees({2}, {1}, {3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(poincare_from_invariant_degrees({0}, {1}, {}),
                    std::invalid_argument);
}

TEST_CASE("split-rank membership check") {
    MonomialOrder lex1 = MonomialOrder::lex(1);
    // u^4 = (u^2)^2: quotient stays inside the image subalgebra.
    CHECK(cartan_type_check(one_variable_restriction({"u^2", "u^4"}, 1), lex1));
    // u^3 = u * u^2 needs the non-image factor u.
    CHECK_FALSE(cartan_type_check(one_variable_restriction({"u^2", "u^3"}, 1), lex1));
    CHECK(cartan_type_check(one_variable_restriction({"u^2", "u^6"}, 1), lex1));
    CHECK_FALSE(
        cartan_type_check(one_variable_restriction({"u^2", "u^6", "u^3"}, 1), lex1));
    // Split equal to the number of images: nothing left to check.
    CHECK(cartan_type_check(one_variable_restriction({"u^2", "u^3"}, 2), lex1));
    // Zero images beyond the split are trivially inside.
    CHECK(cartan_type_check(one_variable_restriction({"u^2", "0"}, 1), lex1));
    // Empty head catches only zero tails.
    CHECK_FALSE(cartan_type_check(one_variable_restriction({"u^2"}, 0), lex1));
    CHECK_THROWS_AS(cartan_type_check(one_variable_restriction({"u^2"}, 2), lex1),
                    std::invalid_argument);

    // Two-variable symmetric data.
    MonomialOrder lex2 = MonomialOrder::lex(2);
    auto two_var = [](const std::vector<std::string>& images, int split) {
        RestrictionData r;
        r.variable_names = {"u", "v"};
        for (const std::string& text : images) {
            r.images.push_back(parse_polynomial(text, 2, {"u", "v"}));
        }
        r.split_rank = split;
        return r;
    };
    // u^4 + v^4 = (u^2+v^2)^2 - 2*u^2*v^2.
    CHECK(cartan_type_check(
        two_var({"u^2 + v^2", "u^2*v^2", "u^4 + v^4"}, 2), lex2));
    // u^3*v^3 = (uv)^3 needs the odd factor uv.
    CHECK_FALSE(cartan_type_check(
        two_var({"u^2 + v^2", "u^2*v^2", "u^3*v^3"}, 2), lex2));
}

TEST_CASE("product models and fibration factorization") {
    CartanModel model{g2_flag_presentation(), {7, 7}};
    PoincarePolynomial series = cartan_model_poincare(model);
    CHECK(series.degree() == 26);
    CHECK(series.is_palindromic());
    CHECK(series.coefficient(0) == 1);
    PoincarePolynomial expected = g2_flag_presentation().quotient().poincare_polynomial() *
                                  PoincarePolynomial::one_plus_t_power(7) *
                                  PoincarePolynomial::one_plus_t_power(7);
    CHECK(series == expected);

    // An empty exterior part reproduces the plain quotient count.
    CartanModel bare{g2_flag_presentation(), {}};
    CHECK(cartan_model_poincare(bare) ==
          g2_flag_presentation().quotient().poincare_polynomial());

    CHECK_THROWS_AS(cartan_model_poincare(CartanModel{g2_flag_presentation(), {4}}),
                    std::invalid_argument);

    PoincarePolynomial base = PoincarePolynomial::one_plus_t_power(2);
    PoincarePolynomial fiber = PoincarePolynomial::one_plus_t_power(4);
    CHECK(fibration_factorization_check(base * fiber, base, fiber));
    CHECK_FALSE(fibration_factorization_check(base * fiber + base, base, fiber));
}

TEST_CASE("presentation serialization round-trips") {
    for (const SpacePresentation& p :
         {flag_presentation(Family::A, 3), flag_presentation(Family::B, 2),
          flag_presentation(Family::D, 3), g2_flag_presentation()}) {
        Json j = presentation_to_json(p);
        CHECK(j["schema_version"] == 1);
        CHECK(j["name"] == p.name());
        SpacePresentation back = presentation_from_json(j);
        CHECK(presentation_to_json(back) == j);
        CHECK(back.name() == p.name());
        CHECK(back.dimension() == p.dimension());
        CHECK(back.ideal_generators() == p.ideal_generators());
        CHECK(back.order() == p.order());
    }

    Json g2 = presentation_to_json(g2_flag_presentation());
    CHECK(g2["variables"] == Json::array({"x", "y"}));
    CHECK(g2["generators"][0] == "x^2 + 3*x*y + 3*y^2");
    CHECK(g2["family"] == "G2");
    CHECK(g2["basis_bounds"] == Json::array({1, 5}));
}

TEST_CASE("order and restriction serialization round-trips") {
    MonomialOrder order(OrderKind::grevlex, {2, 0, 1});
    MonomialOrder back = order_from_json(order_to_json(order));
    CHECK(back == order);

    RestrictionFile file{one_variable_restriction({"u^2", "u^4"}, 1),
                         MonomialOrder::lex(1)};
    Json j = restriction_to_json(file);
    RestrictionFile loaded = restriction_from_json(j);
    CHECK(loaded.data.variable_names == file.data.variable_names);
    CHECK(loaded.data.images == file.data.images);
    CHECK(loaded.data.split_rank == 1);
    CHECK(restriction_to_json(loaded) == j);
}

TEST_CASE("serialization rejects malformed input") {
    Json j = presentation_to_json(flag_presentation(Family::A, 2));
    Json missing = j;
    missing.erase("generators");
    CHECK_THROWS_AS(presentation_from_json(missing), std::invalid_argument);

    Json bad_family = j;
    bad_family["family"] = "Z9";
    CHECK_THROWS_AS(presentation_from_json(bad_family), std::invalid_argument);

    Json bad_dim = j;
    bad_dim["dimension"] = 7;
    CHECK_THROWS_AS(presentation_from_json(bad_dim), std::invalid_argument);

    Json bad_poly = j;
    bad_poly["generators"][0] = "x1 + zz";
    CHECK_THROWS_AS(presentation_from_json(bad_poly), std::invalid_argument);

    CHECK_THROWS_AS(load_presentation("/nonexistent/path.json"),
                    std::invalid_argument);
}

}  // TEST_SUITE("spaces")
