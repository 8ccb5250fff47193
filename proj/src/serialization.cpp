#include "coflag/serialization.hpp"

#include <fstream>
#include <stdexcept>

#include "coflag/poly_text.hpp"

namespace coflag {

namespace {

constexpr int kSchemaVersion = 1;

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing required field '") + key + "'");
    }
    return *it;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
    const Json& field = require(j, key);
    if (!field.is_array()) {
        throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    }
    std::vector<std::string> out;
    for (const Json& item : field) {
        if (!item.is_string()) {
            throw std::invalid_argument(std::string("field '") + key +
                                        "' must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<int> int_list(const Json& j, const char* key) {
    const Json& field = require(j, key);
    if (!field.is_array()) {
        throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    }
    std::vector<int> out;
    for (const Json& item : field) {
        if (!item.is_number_integer()) {
            throw std::invalid_argument(std::string("field '") + key +
                                        "' must contain only integers");
        }
        out.push_back(item.get<int>());
    }
    return out;
}

int int_field(const Json& j, const char* key) {
    const Json& field = require(j, key);
    if (!field.is_number_integer()) {
        throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    }
    return field.get<int>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& field = require(j, key);
    if (!field.is_string()) {
        throw std::invalid_argument(std::string("field '") + key + "' must be a string");
    }
    return field.get<std::string>();
}

void check_schema_version(const Json& j) {
    if (int_field(j, "schema_version") != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema_version (expected " +
                                    std::to_string(kSchemaVersion) + ")");
    }
}

}  // namespace

Json order_to_json(const MonomialOrder& order) {
    Json j;
    j["kind"] = to_string(order.kind());
    j["precedence"] = order.precedence();
    return j;
}

MonomialOrder order_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("order must be an object");
    OrderKind kind = order_kind_from_string(string_field(j, "kind"));
    std::vector<int> precedence = int_list(j, "precedence");
    return MonomialOrder(kind, std::move(precedence));
}

Json presentation_to_json(const SpacePresentation& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = p.name();
    j["family"] = to_string(p.family());
    j["rank"] = p.rank();
    j["variables"] = p.variable_names();
    j["order"] = order_to_json(p.order());
    Json gens = Json::array();
    for (const Polynomial& g : p.ideal_generators()) {
        gens.push_back(to_string(g, p.variable_names()));
    }
    j["generators"] = std::move(gens);
    j["degrees_G"] = p.degrees_g();
    j["degrees_H"] = p.degrees_h();
    j["exterior_degrees"] = p.exterior_degrees();
    j["dimension"] = p.dimension();
    if (p.pattern()) {
        j["basis_bounds"] = p.pattern()->bounds;
        j["product_condition"] = p.pattern()->product_condition;
    }
    return j;
}

SpacePresentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("presentation must be a JSON object");
    check_schema_version(j);
    std::string name = string_field(j, "name");
    Family family = family_from_string(string_field(j, "family"));
    int rank = int_field(j, "rank");
    std::vector<std::string> variables = string_list(j, "variables");
    MonomialOrder order = order_from_json(require(j, "order"));
    int arity = static_cast<int>(variables.size());
    std::vector<Polynomial> generators;
    for (const std::string& text : string_list(j, "generators")) {
        generators.push_back(parse_polynomial(text, arity, variables));
    }
    std::optional<BasisPattern> pattern;
    if (j.contains("basis_bounds")) {
        BasisPattern bp;
        bp.bounds = int_list(j, "basis_bounds");
        bp.product_condition = j.value("product_condition", false);
        pattern = std::move(bp);
    }
    return SpacePresentation(std::move(name), family, rank, std::move(variables),
                             std::move(generators), std::move(order), int_list(j, "degrees_G"),
                             int_list(j, "degrees_H"), int_list(j, "exterior_degrees"),
                             int_field(j, "dimension"), std::move(pattern));
}

Json restriction_to_json(const RestrictionFile& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["variables"] = r.data.variable_names;
    j["order"] = order_to_json(r.order);
    Json images = Json::array();
    for (const Polynomial& f : r.data.images) {
        images.push_back(to_string(f, r.data.variable_names));
    }
    j["images"] = std::move(images);
    j["split_rank"] = r.data.split_rank;
    return j;
}

RestrictionFile restriction_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("restriction must be a JSON object");
    check_schema_version(j);
    RestrictionFile out{RestrictionData{}, MonomialOrder::lex(0)};
    out.data.variable_names = string_list(j, "variables");
    out.order = order_from_json(require(j, "order"));
    int arity = static_cast<int>(out.data.variable_names.size());
    for (const std::string& text : string_list(j, "images")) {
        out.data.images.push_back(parse_polynomial(text, arity, out.data.variable_names));
    }
    out.data.split_rank = int_field(j, "split_rank");
    if (out.order.arity() != arity) {
        throw std::invalid_argument("order arity does not match the variable count");
    }
    return out;
}

namespace {

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace

SpacePresentation load_presentation(const std::string& path) {
    Json j = parse_file(path);
    try {
        return presentation_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("presentation file '" + path + "': " + e.what());
    }
}

RestrictionFile load_restriction(const std::string& path) {
    Json j = parse_file(path);
    try {
        return restriction_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("restriction file '" + path + "': " + e.what());
    }
}

}  // namespace coflag
