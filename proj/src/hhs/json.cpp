#include "relhyp/json_io.hpp"

namespace relhyp::json_io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw SchemaError(path, "expected an array");
    }
    return j;
}

std::vector<std::pair<std::string, std::string>> id_pairs(const json& j, const std::string& key) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.contains(key)) {
        return out;
    }
    const std::string path = "/" + key;
    const json& arr = require_array(j.at(key), path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
            throw SchemaError(at(path, i), "expected a pair of domain ids, got " + p.dump());
        }
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

json pair_list(const std::vector<std::pair<std::string, std::string>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) {
        out.push_back({a, b});
    }
    return out;
}

std::string clean_name(hhs::CleanContainers c) {
    switch (c) {
        case hhs::CleanContainers::holds:
            return "holds";
        case hhs::CleanContainers::fails:
            return "fails";
        case hhs::CleanContainers::not_checked:
            break;
    }
    return "not-checked";
}

json violation_list(const std::vector<hhs::Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        out.push_back({{"axiom", v.axiom}, {"domains", v.domains}});
    }
    return out;
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
}

hhs::IndexStructure index_structure_from_json(const json& j) {
    if (!j.is_object()) {
        throw SchemaError("", "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "domains" && key != "nest" && key != "orth") {
            throw SchemaError("/" + key, "unknown key");
        }
    }
    if (!j.contains("domains")) {
        throw SchemaError("/domains", "missing");
    }
    hhs::IndexStructure s;
    const json& domains = require_array(j.at("domains"), "/domains");
    for (std::size_t i = 0; i < domains.size(); ++i) {
        const json& d = domains[i];
        const std::string path = at("/domains", i);
        if (!d.is_object() || !d.contains("id") || !d.at("id").is_string()) {
            throw SchemaError(path, "expected {\"id\": string, \"unbounded\": bool}");
        }
        bool unbounded = false;
        if (d.contains("unbounded")) {
            if (!d.at("unbounded").is_boolean()) {
                throw SchemaError(at(path, "unbounded"), "expected a boolean");
            }
            unbounded = d.at("unbounded").get<bool>();
        }
        s.domains.push_back({d.at("id").get<std::string>(), unbounded});
    }
    s.nest = id_pairs(j, "nest");
    s.orth = id_pairs(j, "orth");
    return s;
}

json to_json(const hhs::IndexStructure& s) {
    json domains = json::array();
    for (const auto& d : s.domains) {
        domains.push_back({{"id", d.id}, {"unbounded", d.unbounded}});
    }
    return {{"domains", domains}, {"nest", pair_list(s.nest)}, {"orth", pair_list(s.orth)}};
}

json to_json(const hhs::ValidationReport& r) {
    return {{"valid", r.valid()},
            {"violations", violation_list(r.violations)},
            {"clean_containers", clean_name(r.clean_containers)},
            {"clean_container_failures", violation_list(r.clean_container_failures)}};
}

json to_json(const hhs::IsolationCertificate& c) {
    json witnesses = json::array();
    for (const auto& [pair, u] : c.pair_witness) {
        witnesses.push_back({{"pair", {pair.first, pair.second}}, {"container", u}});
    }
    return {{"isolating_set", c.isolating_set},
            {"pair_witness", witnesses},
            {"membership", c.membership}};
}

json to_json(const hhs::IsolationViolation& v) {
    return {{"clause", std::string(hhs::to_string(v.clause))}, {"witnesses", v.witnesses}};
}

json to_json(const hhs::RelativeStructureSkeleton& s) {
    return {{"structure", to_json(s.structure)},
            {"top", s.top},
            {"peripherals", s.peripherals},
            {"rank", s.rank}};
}

}  // namespace relhyp::json_io
