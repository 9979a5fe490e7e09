#include "leonard/json_io.hpp"

namespace leonard {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw error(std::string("missing key '") + key + "'");
    return *it;
}

std::vector<std::string> string_array(const json& j, const char* key, std::size_t expected) {
    const json& arr = require(j, key);
    if (!arr.is_array())
        throw error(std::string("'") + key + "' must be an array of scalar strings");
    if (arr.size() != expected)
        throw error(std::string("'") + key + "' must have " + std::to_string(expected) +
                    " entries, got " + std::to_string(arr.size()));
    std::vector<std::string> out;
    for (const json& e : arr) {
        if (!e.is_string())
            throw error(std::string("'") + key + "' entries must be strings (exact scalars are "
                                                  "never JSON numbers)");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<Scalar> parse_all(const std::vector<std::string>& texts, const FieldDescriptor& f,
                              const char* name) {
    std::vector<Scalar> out;
    out.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            out.push_back(Scalar::parse(texts[i], f));
        } catch (const error& e) {
            throw error(std::string(name) + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

}  // namespace

json field_to_json(const FieldDescriptor& field) {
    if (field.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", field.modulus()}};
}

FieldDescriptor field_from_json(const json& j) {
    if (!j.is_object()) throw error("'field' must be an object");
    const json& kind = require(j, "kind");
    if (!kind.is_string()) throw error("'field.kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "rational") return FieldDescriptor::rational();
    if (k == "prime") {
        const json& p = require(j, "p");
        if (!p.is_number_unsigned() && !p.is_number_integer())
            throw error("'field.p' must be a positive integer");
        const auto value = p.get<std::int64_t>();
        if (value < 3) throw error("'field.p' must be an odd prime >= 3");
        return FieldDescriptor::prime(static_cast<std::uint64_t>(value));
    }
    throw error("'field.kind' must be \"rational\" or \"prime\"");
}

InputDocument input_from_json(const json& j) {
    if (!j.is_object()) throw error("input document must be a JSON object");
    InputDocument doc;
    doc.field = field_from_json(require(j, "field"));
    const json& d = require(j, "d");
    if (!d.is_number_integer() && !d.is_number_unsigned())
        throw error("'d' must be an integer");
    doc.d = d.get<int>();
    if (doc.d < 1) throw error("'d' must be >= 1");
    const auto n = static_cast<std::size_t>(doc.d);

    if (j.contains("theta")) doc.theta = string_array(j, "theta", n + 1);
    doc.theta_star = string_array(j, "theta_star", n + 1);
    doc.a = string_array(j, "a", n + 1);
    doc.b = string_array(j, "b", n);
    doc.c = string_array(j, "c", n);

    for (const char* key : {"beta", "gamma_star"}) {
        if (!j.contains(key)) continue;
        const json& v = j.at(key);
        if (!v.is_string()) throw error(std::string("'") + key + "' must be a scalar string");
        if (std::string(key) == "beta")
            doc.beta = v.get<std::string>();
        else
            doc.gamma_star = v.get<std::string>();
    }
    return doc;
}

json input_to_json(const InputDocument& doc) {
    json j;
    j["field"] = field_to_json(doc.field);
    j["d"] = doc.d;
    if (doc.theta) j["theta"] = *doc.theta;
    j["theta_star"] = doc.theta_star;
    j["a"] = doc.a;
    j["b"] = doc.b;
    j["c"] = doc.c;
    if (doc.beta) j["beta"] = *doc.beta;
    if (doc.gamma_star) j["gamma_star"] = *doc.gamma_star;
    return j;
}

LeonardData to_leonard_data(const InputDocument& doc) {
    if (!doc.theta) throw error("document has no 'theta' (use infer for theta-less input)");
    LeonardData data;
    data.d = doc.d;
    data.field = doc.field;
    data.theta = parse_all(*doc.theta, doc.field, "theta");
    data.theta_star = parse_all(doc.theta_star, doc.field, "theta_star");
    data.a = parse_all(doc.a, doc.field, "a");
    data.b = parse_all(doc.b, doc.field, "b");
    data.c = parse_all(doc.c, doc.field, "c");
    if (doc.beta) data.beta_override = Scalar::parse(*doc.beta, doc.field);
    if (doc.gamma_star) data.gamma_star_override = Scalar::parse(*doc.gamma_star, doc.field);
    data.validate_shape();
    return data;
}

PartialLeonardData to_partial_data(const InputDocument& doc) {
    PartialLeonardData partial;
    partial.d = doc.d;
    partial.field = doc.field;
    partial.theta_star = parse_all(doc.theta_star, doc.field, "theta_star");
    partial.a = parse_all(doc.a, doc.field, "a");
    partial.b = parse_all(doc.b, doc.field, "b");
    partial.c = parse_all(doc.c, doc.field, "c");
    if (doc.beta) partial.beta_override = Scalar::parse(*doc.beta, doc.field);
    if (doc.gamma_star) partial.gamma_star_override = Scalar::parse(*doc.gamma_star, doc.field);
    return partial;
}

InputDocument document_from(const LeonardData& data) {
    InputDocument doc;
    doc.field = data.field;
    doc.d = data.d;
    auto render = [](const std::vector<Scalar>& v) {
        std::vector<std::string> out;
        out.reserve(v.size());
        for (const Scalar& s : v) out.push_back(s.str());
        return out;
    };
    doc.theta = render(data.theta);
    doc.theta_star = render(data.theta_star);
    doc.a = render(data.a);
    doc.b = render(data.b);
    doc.c = render(data.c);
    if (data.beta_override) doc.beta = data.beta_override->str();
    if (data.gamma_star_override) doc.gamma_star = data.gamma_star_override->str();
    return doc;
}

json constants_to_json(const RecurrenceConstants& k) {
    return json{{"beta", k.beta.str()},
                {"gamma", k.gamma.str()},
                {"gamma_star", k.gamma_star.str()},
                {"delta_star", k.delta_star.str()},
                {"omega", k.omega.str()},
                {"eta_star", k.eta_star.str()},
                {"Omega", k.Omega.str()},
                {"a0_star", k.a0_star.str()},
                {"theta_m1", k.theta_m1.str()},
                {"theta_dp1", k.theta_dp1.str()},
                {"theta_star_m1", k.theta_star_m1.str()},
                {"theta_star_dp1", k.theta_star_dp1.str()}};
}

json violations_to_json(const ConditionReport& report) {
    json arr = json::array();
    for (const ConditionViolation& v : report.violations) {
        json entry{{"condition", v.condition}, {"message", v.message}};
        if (v.index >= 0) entry["index"] = v.index;
        if (v.residual) entry["residual"] = v.residual->str();
        arr.push_back(std::move(entry));
    }
    return json{{"passed", report.passed()}, {"violations", std::move(arr)}};
}

}  // namespace leonard
