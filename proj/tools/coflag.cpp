#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coflag/groebner.hpp"
#include "coflag/poly_text.hpp"
#include "coflag/quotient.hpp"
#include "coflag/serialization.hpp"
#include "coflag/spaces.hpp"
#include "coflag/verify.hpp"

namespace {

using namespace coflag;

struct Options {
    std::string format = "text";
    std::string order;  // empty: use the presentation's stored order
    int max_rank = 8;
    int degree_cap = 0;
    std::string file;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

SpacePresentation resolve_space(const Options& opt, const std::string& family_arg, int rank_arg) {
    if (!opt.file.empty()) {
        if (!family_arg.empty()) {
            throw UsageError("give either a family/rank selector or --file, not both");
        }
        return load_presentation(opt.file);
    }
    if (family_arg.empty()) {
        throw UsageError("select a space: FAMILY RANK (e.g. 'A 3'), 'G2', or --file PATH");
    }
    Family family = family_from_string(family_arg);
    if (family == Family::G2) {
        if (rank_arg != 0 && rank_arg != 2) throw UsageError("G2 has rank 2");
        return g2_flag_presentation();
    }
    if (rank_arg <= 0) {
        throw UsageError("family " + to_string(family) + " needs a positive rank argument");
    }
    if (rank_arg > opt.max_rank) {
        throw UsageError("rank " + std::to_string(rank_arg) + " exceeds --max-rank " +
                         std::to_string(opt.max_rank) + " (raise the cap explicitly)");
    }
    return flag_presentation(family, rank_arg);
}

MonomialOrder active_order(const Options& opt, const SpacePresentation& p) {
    if (opt.order.empty()) return p.order();
    return MonomialOrder::make(order_kind_from_string(opt.order), p.arity());
}

bool json_output(const Options& opt) {
    if (opt.format == "json") return true;
    if (opt.format == "text") return false;
    throw UsageError("unknown --format '" + opt.format + "' (expected text or json)");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string join_ints(const std::vector<int>& items) {
    std::vector<std::string> text;
    text.reserve(items.size());
    for (int v : items) text.push_back(std::to_string(v));
    return join(text, ", ");
}

int cmd_present(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    if (json_output(opt)) {
        emit(presentation_to_json(p));
        return 0;
    }
    std::cout << "name: " << p.name() << "\n";
    std::cout << "family: " << to_string(p.family()) << "\n";
    std::cout << "rank: " << p.rank() << "\n";
    std::cout << "dimension: " << p.dimension() << "\n";
    std::cout << "variables: " << join(p.variable_names(), ", ") << "\n";
    std::cout << "order: " << to_string(p.order().kind()) << "\n";
    std::cout << "generators (" << p.ideal_generators().size() << "):\n";
    for (const Polynomial& g : p.ideal_generators()) {
        std::cout << "  " << to_string(g, p.variable_names()) << "\n";
    }
    std::cout << "degrees_G: " << join_ints(p.degrees_g()) << "\n";
    std::cout << "degrees_H: " << join_ints(p.degrees_h()) << "\n";
    std::cout << "exterior_degrees: "
              << (p.exterior_degrees().empty() ? "(none)" : join_ints(p.exterior_degrees()))
              << "\n";
    if (p.pattern()) {
        std::cout << "basis_bounds: " << join_ints(p.pattern()->bounds) << "\n";
        if (p.pattern()->product_condition) std::cout << "product_condition: true\n";
    }
    return 0;
}

int cmd_groebner(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    MonomialOrder order = active_order(opt, p);
    GroebnerBasis gb = buchberger(p.ideal_generators(), order);
    if (json_output(opt)) {
        Json j;
        j["space"] = p.name();
        j["order"] = order_to_json(order);
        Json gens = Json::array();
        for (const Polynomial& g : gb.generators()) gens.push_back(to_string(g, p.variable_names()));
        j["generators"] = std::move(gens);
        emit(j);
        return 0;
    }
    std::cout << "space: " << p.name() << "\n";
    std::cout << "order: " << to_string(order.kind()) << "\n";
    std::cout << "reduced basis (" << gb.generators().size() << "):\n";
    for (const Polynomial& g : gb.generators()) {
        std::cout << "  " << to_string(g, p.variable_names()) << "\n";
    }
    return 0;
}

int cmd_basis(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    MonomialOrder order = active_order(opt, p);
    QuotientRing q = QuotientRing::from_generators(p.ideal_generators(), order);
    std::vector<Monomial> basis = q.standard_monomials();
    if (json_output(opt)) {
        Json j;
        j["space"] = p.name();
        j["dimension"] = basis.size();
        Json monomials = Json::array();
        for (const Monomial& m : basis) monomials.push_back(to_string(m, p.variable_names()));
        j["monomials"] = std::move(monomials);
        emit(j);
        return 0;
    }
    std::cout << "space: " << p.name() << "\n";
    std::cout << "dimension: " << basis.size() << "\n";
    std::cout << "standard monomials:\n";
    for (const Monomial& m : basis) {
        std::cout << "  " << to_string(m, p.variable_names()) << "\n";
    }
    return 0;
}

int cmd_poincare(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    MonomialOrder order = active_order(opt, p);
    QuotientRing q = QuotientRing::from_generators(p.ideal_generators(), order);
    PoincarePolynomial series = q.poincare_polynomial();
    for (int d : p.exterior_degrees()) series = series * PoincarePolynomial::one_plus_t_power(d);
    if (json_output(opt)) {
        Json j;
        j["space"] = p.name();
        j["series"] = series.to_string();
        j["coefficients"] = series.coefficients();
        j["total"] = series.sum();
        j["top_degree"] = series.degree();
        emit(j);
        return 0;
    }
    std::cout << "space: " << p.name() << "\n";
    std::cout << "series: " << series.to_string() << "\n";
    std::cout << "total: " << series.sum() << "\n";
    std::cout << "top degree: " << series.degree() << "\n";
    return 0;
}

int cmd_top_class(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    MonomialOrder order = active_order(opt, p);
    QuotientRing q = QuotientRing::from_generators(p.ideal_generators(), order);
    auto [degree, monomials] = q.top_class();
    if (json_output(opt)) {
        Json j;
        j["space"] = p.name();
        j["degree"] = degree;
        Json list = Json::array();
        for (const Monomial& m : monomials) list.push_back(to_string(m, p.variable_names()));
        j["monomials"] = std::move(list);
        emit(j);
        return 0;
    }
    std::cout << "space: " << p.name() << "\n";
    std::cout << "degree: " << degree << "\n";
    std::cout << "monomials:";
    for (const Monomial& m : monomials) std::cout << " " << to_string(m, p.variable_names());
    std::cout << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& family_arg, int rank_arg) {
    SpacePresentation p = resolve_space(opt, family_arg, rank_arg);
    VerificationReport report = verify_space(p, opt.degree_cap);
    if (json_output(opt)) {
        Json j;
        j["space"] = p.name();
        Json claims = Json::array();
        for (const Claim& c : report.claims()) {
            Json entry;
            entry["id"] = c.id;
            entry["statement"] = c.statement;
            entry["passed"] = c.passed;
            if (!c.passed) entry["witness"] = c.witness;
            claims.push_back(std::move(entry));
        }
        j["claims"] = std::move(claims);
        j["all_passed"] = report.all_passed();
        emit(j);
    } else {
        std::cout << "space: " << p.name() << "\n";
        for (const Claim& c : report.claims()) {
            if (c.passed) {
                std::cout << "[PASS] " << c.id << "\n";
            } else {
                std::cout << "[FAIL] " << c.id << " — " << c.statement
                          << " — witness: " << c.witness << "\n";
            }
        }
        std::cout << "summary: " << report.claims().size() << " claims, "
                  << report.failure_count() << " failed\n";
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_cartan_type(const Options& opt) {
    if (opt.file.empty()) throw UsageError("cartan-type needs --file RESTRICTION.json");
    RestrictionFile r = load_restriction(opt.file);
    MonomialOrder order = opt.order.empty()
                              ? r.order
                              : MonomialOrder::make(order_kind_from_string(opt.order),
                                                    static_cast<int>(r.data.variable_names.size()));
    bool result = cartan_type_check(r.data, order);
    if (json_output(opt)) {
        Json j;
        j["file"] = opt.file;
        j["split_rank"] = r.data.split_rank;
        j["cartan_type"] = result;
        emit(j);
    } else {
        std::cout << (result ? "true" : "false") << "\n";
    }
    return result ? 0 : 1;
}

// A series argument is one of: a family/rank token like "A3" or "G2" (the
// flag manifold's graded count), "@path.json" (a presentation file's count,
// exterior factors included), or a literal like "1 + t^5 + t^9 + t^14".
PoincarePolynomial parse_series_argument(const Options& opt, const std::string& text) {
    if (text.empty()) throw UsageError("empty series argument");
    if (text.front() == '@') {
        SpacePresentation p = load_presentation(text.substr(1));
        PoincarePolynomial series = p.quotient().poincare_polynomial();
        for (int d : p.exterior_degrees()) {
            series = series * PoincarePolynomial::one_plus_t_power(d);
        }
        return series;
    }
    if (text.find('t') == std::string::npos) {
        // family/rank token, e.g. "A3", "D4", "G2"
        std::size_t split = 0;
        while (split < text.size() && !std::isdigit(static_cast<unsigned char>(text[split]))) {
            ++split;
        }
        std::string family_part = text.substr(0, split);
        std::string rank_part = text.substr(split);
        if (family_part == "G" && rank_part == "2") {
            family_part = "G2";
            rank_part.clear();
        }
        Family family = family_from_string(family_part);
        if (family == Family::G2) {
            return g2_flag_presentation().quotient().poincare_polynomial();
        }
        if (rank_part.empty()) throw UsageError("series token '" + text + "' needs a rank");
        int rank = std::stoi(rank_part);
        if (rank > opt.max_rank) {
            throw UsageError("rank " + std::to_string(rank) + " exceeds --max-rank " +
                             std::to_string(opt.max_rank));
        }
        return flag_presentation(family, rank).quotient().poincare_polynomial();
    }
    // literal polynomial in t
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw UsageError("series literal: expected digits at position " +
                                           std::to_string(pos) + " in '" + text + "'");
        return std::stoll(text.substr(start, pos - start));
    };
    skip_ws();
    std::int64_t sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    while (true) {
        skip_ws();
        std::int64_t coeff = 1;
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = read_int();
            saw_number = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        int degree = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            skip_ws();
            degree = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                degree = static_cast<int>(read_int());
            }
        } else if (!saw_number) {
            throw UsageError("series literal: expected a term at position " + std::to_string(pos) +
                             " in '" + text + "'");
        }
        if (static_cast<std::size_t>(degree) >= coeffs.size()) {
            coeffs.resize(static_cast<std::size_t>(degree) + 1, 0);
        }
        coeffs[static_cast<std::size_t>(degree)] += sign * coeff;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+') {
            sign = 1;
        } else if (text[pos] == '-') {
            sign = -1;
        } else {
            throw UsageError("series literal: unexpected character '" + std::string(1, text[pos]) +
                             "' at position " + std::to_string(pos) + " in '" + text + "'");
        }
        ++pos;
    }
    return PoincarePolynomial::from_coefficients(std::move(coeffs));
}

int cmd_factor_check(const Options& opt, const std::string& total_arg,
                     const std::string& base_arg, const std::string& fiber_arg) {
    PoincarePolynomial total = parse_series_argument(opt, total_arg);
    PoincarePolynomial base = parse_series_argument(opt, base_arg);
    PoincarePolynomial fiber = parse_series_argument(opt, fiber_arg);
    bool result = fibration_factorization_check(total, base, fiber);
    if (json_output(opt)) {
        Json j;
        j["total"] = total.to_string();
        j["base"] = base.to_string();
        j["fiber"] = fiber.to_string();
        j["product"] = (base * fiber).to_string();
        j["factors"] = result;
        emit(j);
    } else {
        std::cout << "total:   " << total.to_string() << "\n";
        std::cout << "base:    " << base.to_string() << "\n";
        std::cout << "fiber:   " << fiber.to_string() << "\n";
        std::cout << "product: " << (base * fiber).to_string() << "\n";
        std::cout << (result ? "true" : "false") << "\n";
    }
    return result ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology presentations of flag manifolds and related spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")->capture_default_str();
    app.add_option("--order", opt.order, "monomial order override: lex, grlex or grevlex");
    app.add_option("--max-rank", opt.max_rank, "largest rank accepted for flag families")
        ->capture_default_str();
    app.add_option("--degree-cap", opt.degree_cap,
                   "degree cap for vanishing-identity checks (0 = default)");
    app.add_option("--file", opt.file, "presentation or restriction JSON file");

    struct SpaceArgs {
        std::string family;
        int rank = 0;
    };
    auto add_space_command = [&](const std::string& name, const std::string& description) {
        CLI::App* sub = app.add_subcommand(name, description);
        auto args = std::make_shared<SpaceArgs>();
        sub->add_option("family", args->family, "family: A, B, C, D or G2");
        sub->add_option("rank", args->rank, "rank (number of torus directions)");
        return std::make_pair(sub, args);
    };

    auto [present, present_args] = add_space_command("present", "print a space's presentation");
    auto [groebner_cmd, groebner_args] =
        add_space_command("groebner", "reduced Groebner basis of the presentation ideal");
    auto [basis_cmd, basis_args] =
        add_space_command("basis", "standard monomial basis of the quotient");
    auto [poincare_cmd, poincare_args] =
        add_space_command("poincare", "graded dimension count of the quotient");
    auto [top_cmd, top_args] = add_space_command("top-class", "top graded component");
    auto [verify_cmd, verify_args] =
        add_space_command("verify", "machine-check the space's structural claims");

    CLI::App* cartan = app.add_subcommand(
        "cartan-type", "test whether leading restriction images generate the rest");

    std::string total_arg, base_arg, fiber_arg;
    CLI::App* factor = app.add_subcommand(
        "factor-check", "check a graded-count factorization total = base * fiber");
    factor->add_option("--total", total_arg, "total space: family token, @file or t-literal")
        ->required();
    factor->add_option("--base", base_arg, "base space: family token, @file or t-literal")
        ->required();
    factor->add_option("--fiber", fiber_arg, "fiber: family token, @file or t-literal")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (present->parsed()) return cmd_present(opt, present_args->family, present_args->rank);
        if (groebner_cmd->parsed()) {
            return cmd_groebner(opt, groebner_args->family, groebner_args->rank);
        }
        if (basis_cmd->parsed()) return cmd_basis(opt, basis_args->family, basis_args->rank);
        if (poincare_cmd->parsed()) {
            return cmd_poincare(opt, poincare_args->family, poincare_args->rank);
        }
        if (top_cmd->parsed()) return cmd_top_class(opt, top_args->family, top_args->rank);
        if (verify_cmd->parsed()) return cmd_verify(opt, verify_args->family, verify_args->rank);
        if (cartan->parsed()) return cmd_cartan_type(opt);
        if (factor->parsed()) return cmd_factor_check(opt, total_arg, base_arg, fiber_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand given\n";
    return 2;
}
