// json_io.hpp -- JSON schemas for the batch CLI.
//
// Every scalar travels as a string in the canonical `-?digits(/digits)?`
// form, never as a JSON number: exact rationals and big integers must
// survive any JSON tooling untouched. Field descriptors are
// {"kind":"rational"} or {"kind":"prime","p":101}.

#ifndef LEONARD_JSON_IO_HPP
#define LEONARD_JSON_IO_HPP

#include "leonard/certify.hpp"

#include <json.hpp>

namespace leonard {

/// The document accepted by `certify` and `infer`: the scalar package of a
/// candidate Leonard system with every scalar string-encoded.
struct InputDocument {
    FieldDescriptor field = FieldDescriptor::rational();
    int d = 0;
    std::optional<std::vector<std::string>> theta;
    std::vector<std::string> theta_star;
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::string> c;
    std::optional<std::string> beta;
    std::optional<std::string> gamma_star;
};

nlohmann::json field_to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const nlohmann::json& j);

/// Validates the schema: required keys, types, and array lengths
/// (theta/theta_star/a: d+1 entries, b/c: d). Throws leonard::error with a
/// description of the first problem found.
InputDocument input_from_json(const nlohmann::json& j);
nlohmann::json input_to_json(const InputDocument& doc);

/// Parses every scalar string under the declared field. Requires theta.
LeonardData to_leonard_data(const InputDocument& doc);

/// As above but without theta, for eigenvalue inference.
PartialLeonardData to_partial_data(const InputDocument& doc);

/// Renders library data back to the wire form (used by `generate`).
InputDocument document_from(const LeonardData& data);

nlohmann::json constants_to_json(const RecurrenceConstants& consts);
nlohmann::json violations_to_json(const ConditionReport& report);

}  // namespace leonard

#endif
