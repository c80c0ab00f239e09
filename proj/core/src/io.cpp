#include "ruled/io.hpp"

#include <json.hpp>

namespace ruled {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw document_error(std::string("invalid JSON: ") + e.what());
    }
}

void check_keys(const json& j, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw document_error("document must be a JSON object");
    for (const char* k : keys)
        if (!j.contains(k)) throw document_error(std::string("missing key: ") + k);
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        if (!known) throw document_error("unexpected key: " + item.key());
    }
}

int get_int(const json& j, const char* key, int lo, int hi) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw document_error(std::string(key) + " must be an integer");
    auto n = v.get<std::int64_t>();
    if (n < lo || n > hi) throw document_error(std::string(key) + " out of range");
    return static_cast<int>(n);
}

FieldSpec parse_field(const json& j) {
    FieldSpec fs;
    if (!j.is_object() || !j.contains("type")) throw document_error("field must be {\"type\": ...}");
    const auto& t = j.at("type");
    if (!t.is_string()) throw document_error("field type must be a string");
    const std::string type = t.get<std::string>();
    if (type == "Q") {
        check_keys(j, {"type"});
        fs.rational = true;
    } else if (type == "Fp") {
        check_keys(j, {"type", "p"});
        const auto& p = j.at("p");
        if (!p.is_number_integer()) throw document_error("field p must be an integer");
        auto n = p.get<std::int64_t>();
        if (n < 3) throw document_error("field p out of range");
        try {
            Fp::check_modulus(static_cast<std::uint64_t>(n));
        } catch (const math_error& e) {
            throw document_error(e.what());
        }
        fs.rational = false;
        fs.p = static_cast<std::uint64_t>(n);
    } else {
        throw document_error("unknown field type: " + type);
    }
    return fs;
}

json field_json(const FieldSpec& fs) {
    json j;
    j["type"] = fs.rational ? "Q" : "Fp";
    if (!fs.rational) j["p"] = fs.p;
    return j;
}

std::vector<std::string> string_array(const json& j, std::size_t want, const char* what) {
    if (!j.is_array() || j.size() != want)
        throw document_error(std::string(what) + " must be an array of " + std::to_string(want) + " strings");
    std::vector<std::string> out;
    out.reserve(want);
    for (const auto& e : j) {
        if (!e.is_string()) throw document_error(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

SurfaceDocument parse_surface_document(const std::string& text) {
    json j = parse_json(text);
    check_keys(j, {"d", "field", "omega"});
    SurfaceDocument doc;
    doc.d = get_int(j, "d", 1, 10000);
    doc.field = parse_field(j.at("field"));
    const auto& om = j.at("omega");
    if (!om.is_array() || om.size() != 6) throw document_error("omega must be an array of 6 coefficient arrays");
    for (std::size_t i = 0; i < 6; ++i)
        doc.omega[i] = string_array(om[i], static_cast<std::size_t>(doc.d) + 1, "omega");
    return doc;
}

CurveDocument parse_curve_document(const std::string& text) {
    json j = parse_json(text);
    check_keys(j, {"degree", "coeffs"});
    CurveDocument doc;
    doc.degree = get_int(j, "degree", 0, 10000);
    doc.coeffs = string_array(j.at("coeffs"),
                              PlaneCurve<Rational>::monomial_count(doc.degree), "coeffs");
    return doc;
}

MatrixDocument parse_matrix_document(const std::string& text) {
    json j = parse_json(text);
    check_keys(j, {"entries"});
    const auto& e = j.at("entries");
    if (!e.is_array() || e.empty() || e.size() > 8) throw document_error("entries must be a small square array");
    MatrixDocument doc;
    doc.size = e.size();
    for (const auto& row : e) doc.entries.push_back(string_array(row, doc.size, "entries"));
    return doc;
}

ExtensionDocument parse_extension_document(const std::string& text) {
    json j = parse_json(text);
    check_keys(j, {"n", "field", "a"});
    ExtensionDocument doc;
    doc.n = get_int(j, "n", 2, 64);
    doc.field = parse_field(j.at("field"));
    const auto& a = j.at("a");
    if (!a.is_array() || a.size() != 2) throw document_error("a must be a 2x2 array of coefficient arrays");
    for (std::size_t i = 0; i < 2; ++i) {
        if (!a[i].is_array() || a[i].size() != 2) throw document_error("a must be a 2x2 array of coefficient arrays");
        for (std::size_t k = 0; k < 2; ++k)
            doc.a[i][k] = string_array(a[i][k], 2 * static_cast<std::size_t>(doc.n) - 1, "a");
    }
    return doc;
}

std::string serialize(const SurfaceDocument& doc) {
    json j;
    j["d"] = doc.d;
    j["field"] = field_json(doc.field);
    j["omega"] = doc.omega;
    return j.dump();
}

std::string serialize(const CurveDocument& doc) {
    json j;
    j["degree"] = doc.degree;
    j["coeffs"] = doc.coeffs;
    return j.dump();
}

std::string serialize(const MatrixDocument& doc) {
    json j;
    j["entries"] = doc.entries;
    return j.dump();
}

std::string serialize(const ExtensionDocument& doc) {
    json j;
    j["n"] = doc.n;
    j["field"] = field_json(doc.field);
    j["a"] = doc.a;
    return j.dump();
}

}  // namespace ruled
