#include "hadamard/io.hpp"

#include <utility>

#include <json.hpp>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

using nlohmann::json;

json pair_of(Complex z) { return json::array({z.real(), z.imag()}); }

json pairs_of(const std::vector<Complex>& zs) {
    json arr = json::array();
    for (Complex z : zs) arr.push_back(pair_of(z));
    return arr;
}

Complex complex_of(const json& node) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw InvalidParameters("json: complex values must be [re, im] pairs");
    return Complex(node[0].get<double>(), node[1].get<double>());
}

std::vector<Complex> complexes_of(const json& node) {
    if (!node.is_array()) throw InvalidParameters("json: expected an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(node.size());
    for (const auto& item : node) out.push_back(complex_of(item));
    return out;
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw InvalidParameters("json: malformed document");
    if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != 1)
        throw InvalidParameters("json: expected an object with \"schema\": 1");
    return doc;
}

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw InvalidParameters(std::string("json: missing field \"") + name + "\"");
    return *it;
}

}  // namespace

std::string euler_operator_to_json(const EulerOperator& op) {
    json doc;
    doc["schema"] = 1;
    doc["omega"] = pair_of(op.omega);
    doc["coeffs"] = pairs_of(op.coeffs);
    return doc.dump(2);
}

EulerOperator euler_operator_from_json(const std::string& text) {
    json doc = parse_document(text);
    return EulerOperator(complex_of(field(doc, "omega")), complexes_of(field(doc, "coeffs")));
}

std::string singular_jet_to_json(const SingularJet& jet) {
    json doc;
    doc["schema"] = 1;
    doc["base"] = pair_of(jet.base);
    doc["residue"] = pair_of(jet.residue);
    doc["log_jet"] = pairs_of(jet.log_jet.coeffs());
    doc["regular_jet"] = pairs_of(jet.regular_jet.coeffs());
    return doc.dump(2);
}

SingularJet singular_jet_from_json(const std::string& text) {
    json doc = parse_document(text);
    return SingularJet(complex_of(field(doc, "base")), complex_of(field(doc, "residue")),
                       TruncatedGerm(complexes_of(field(doc, "log_jet"))),
                       TruncatedGerm(complexes_of(field(doc, "regular_jet"))));
}

std::string rational_germ_to_json(const RationalGerm& germ) {
    json doc;
    doc["schema"] = 1;
    doc["omega"] = pair_of(germ.omega);
    doc["pole_coeffs"] = pairs_of(germ.pole_coeffs);
    doc["poly_part"] = pairs_of(germ.poly_part);
    return doc.dump(2);
}

RationalGerm rational_germ_from_json(const std::string& text) {
    json doc = parse_document(text);
    std::vector<Complex> poly;
    if (doc.contains("poly_part")) poly = complexes_of(doc["poly_part"]);
    return RationalGerm(complex_of(field(doc, "omega")),
                        complexes_of(field(doc, "pole_coeffs")), std::move(poly));
}

std::string coefficients_to_json(const std::vector<Complex>& coeffs) {
    json doc;
    doc["schema"] = 1;
    doc["coeffs"] = pairs_of(coeffs);
    return doc.dump(2);
}

std::vector<Complex> coefficients_from_json(const std::string& text) {
    json doc = parse_document(text);
    return complexes_of(field(doc, "coeffs"));
}

}  // namespace hadamard
