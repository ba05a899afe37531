#include "pathcover/certificate.hpp"

#include "pathcover/errors.hpp"

namespace pathcover {

using nlohmann::json;
using nlohmann::ordered_json;

std::string cover_mode_name(CoverMode mode) {
    return mode == CoverMode::Cover ? "cover" : "partition";
}

CoverMode cover_mode_from_name(const std::string& name) {
    if (name == "cover") return CoverMode::Cover;
    if (name == "partition") return CoverMode::Partition;
    throw InvalidParameterError("unknown mode: " + name);
}

namespace {

ordered_json bound_to_json(const BoundInfo& b) {
    ordered_json out;
    out["total"] = b.total;
    ordered_json terms = ordered_json::array();
    for (const auto& t : b.terms) {
        ordered_json jt;
        jt["name"] = t.name;
        jt["value"] = t.value;
        if (!t.formula.empty()) jt["formula"] = t.formula;
        terms.push_back(jt);
    }
    out["terms"] = terms;
    return out;
}

BoundInfo bound_from_json(const json& j) {
    BoundInfo b;
    b.total = j.at("total").get<std::string>();
    for (const auto& jt : j.at("terms")) {
        BoundTerm t;
        t.name = jt.at("name").get<std::string>();
        t.value = jt.at("value").get<std::string>();
        if (jt.contains("formula")) t.formula = jt.at("formula").get<std::string>();
        b.terms.push_back(std::move(t));
    }
    return b;
}

ordered_json string_map_to_json(const std::map<std::string, std::string>& m) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
}

std::map<std::string, std::string> string_map_from_json(const json& j) {
    std::map<std::string, std::string> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[it.key()] = it.value().get<std::string>();
    return m;
}

} // namespace

ordered_json to_json(const PathCoverCertificate& cert) {
    ordered_json out;
    out["kind"] = "path-cover";
    out["mode"] = cover_mode_name(cert.mode);
    out["n"] = cert.n;
    out["paths"] = cert.paths;
    if (cert.bound) out["bound"] = bound_to_json(*cert.bound);
    if (!cert.constants.empty()) out["constants"] = string_map_to_json(cert.constants);
    out["provenance"] = string_map_to_json(cert.provenance);
    return out;
}

ordered_json to_json(const CycleCoverCertificate& cert) {
    ordered_json out;
    out["kind"] = "cycle-cover";
    out["mode"] = cover_mode_name(cert.mode);
    ordered_json units = ordered_json::array();
    for (const auto& u : cert.units) {
        ordered_json ju;
        ju["cycle"] = u.is_cycle;
        ju["vertices"] = u.vertices;
        units.push_back(ju);
    }
    out["units"] = units;
    out["provenance"] = string_map_to_json(cert.provenance);
    return out;
}

PathCoverCertificate path_certificate_from_json(const json& j) {
    if (j.value("kind", "path-cover") != "path-cover")
        throw ParseError(0, "not a path certificate");
    PathCoverCertificate cert;
    cert.mode = cover_mode_from_name(j.at("mode").get<std::string>());
    cert.n = j.value("n", 0);
    cert.paths = j.at("paths").get<std::vector<VertexList>>();
    if (j.contains("bound")) cert.bound = bound_from_json(j.at("bound"));
    if (j.contains("constants")) cert.constants = string_map_from_json(j.at("constants"));
    if (j.contains("provenance")) cert.provenance = string_map_from_json(j.at("provenance"));
    return cert;
}

CycleCoverCertificate cycle_certificate_from_json(const json& j) {
    if (j.value("kind", "") != "cycle-cover") throw ParseError(0, "not a cycle certificate");
    CycleCoverCertificate cert;
    cert.mode = cover_mode_from_name(j.at("mode").get<std::string>());
    for (const auto& ju : j.at("units")) {
        CycleUnit u;
        u.is_cycle = ju.at("cycle").get<bool>();
        u.vertices = ju.at("vertices").get<VertexList>();
        cert.units.push_back(std::move(u));
    }
    if (j.contains("provenance")) cert.provenance = string_map_from_json(j.at("provenance"));
    return cert;
}

bool is_cycle_certificate(const json& j) {
    return j.value("kind", "") == "cycle-cover";
}

} // namespace pathcover
