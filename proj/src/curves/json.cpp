#include "relhyp/json_io.hpp"

namespace relhyp::json_io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

int count_field(const json& v, const char* key, const std::string& path) {
    if (!v.contains(key)) {
        return 0;
    }
    const json& x = v.at(key);
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1000) {
        throw SchemaError(path + "/" + key, "expected a non-negative integer");
    }
    return x.get<int>();
}

json mask_json(curves::VertexMask m) {
    json out = json::array();
    for (std::size_t v = 0; m >> v; ++v) {
        if (m >> v & 1) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

curves::StableGraph stable_graph_from_json(const json& j) {
    if (!j.is_object()) {
        throw SchemaError("", "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "vertices" && key != "edges") {
            throw SchemaError("/" + key, "unknown key");
        }
    }
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw SchemaError("/vertices", "expected an array of pieces");
    }
    std::vector<curves::Piece> pieces;
    const json& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string path = at("/vertices", i);
        if (!vs[i].is_object()) {
            throw SchemaError(path, "expected {\"genus\": g, \"legs\": n}");
        }
        for (const auto& [key, value] : vs[i].items()) {
            if (key != "genus" && key != "legs") {
                throw SchemaError(path + "/" + key, "unknown key");
            }
        }
        pieces.push_back({count_field(vs[i], "genus", path), count_field(vs[i], "legs", path)});
    }
    if (pieces.size() > curves::max_stable_graph_vertices) {
        throw SchemaError("/vertices", "more than " + std::to_string(curves::max_stable_graph_vertices) + " pieces");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (j.contains("edges")) {
        const json& es = j.at("edges");
        if (!es.is_array()) {
            throw SchemaError("/edges", "expected an array");
        }
        for (std::size_t i = 0; i < es.size(); ++i) {
            const json& e = es[i];
            const bool ok = e.is_array() && e.size() == 2 && e[0].is_number_unsigned() && e[1].is_number_unsigned() &&
                            e[0].get<std::size_t>() < pieces.size() && e[1].get<std::size_t>() < pieces.size();
            if (!ok) {
                throw SchemaError(at("/edges", i), "expected [a, b] with vertex indices, got " + e.dump());
            }
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    curves::StableGraph g(std::move(pieces), std::move(edges));
    if (auto why = curves::invalid_reason(g)) {
        throw SchemaError("", *why);
    }
    return g;
}

json to_json(const curves::StableGraph& g) {
    json vs = json::array();
    for (const auto& p : g.pieces()) {
        vs.push_back({{"genus", p.genus}, {"legs", p.legs}});
    }
    json es = json::array();
    for (const auto& [a, b] : g.edges()) {
        es.push_back(json::array({a, b}));
    }
    return {{"vertices", vs}, {"edges", es}};
}

json to_json(const curves::DisjointPair& p) {
    json out = {{"graph", to_json(p.graph)},
                {"a", mask_json(p.a)},
                {"b", mask_json(p.b)},
                {"complementary", p.complementary}};
    if (p.complementary) {
        out["peripheral"] = curves::peripheral_name(p);
    }
    return out;
}

json to_json(const curves::ChainEvidence& e) {
    json chain = json::array();
    for (const auto& step : e.chain) {
        chain.push_back(
            {{"graph", to_json(step.graph)}, {"witness", mask_json(step.witness)}, {"target", mask_json(step.target)}});
    }
    return {{"found", e.found},
            {"max_length", e.max_length},
            {"length_bound", e.length_bound},
            {"decompositions", e.decompositions},
            {"pairs", e.pairs},
            {"states", e.states},
            {"chain", chain},
            {"evidence", "type-level chains; heuristic, not a proof"}};
}

json to_json(const curves::CurvesReport& r) {
    json out = {{"kind", curves::to_string(r.kind)},
                {"surface", {{"g", r.surface.g}, {"n", r.surface.n}, {"xi", r.surface.xi()}}},
                {"status", to_string(r.verdict)},
                {"witness_types", r.witness_types},
                {"disjoint_pairs", r.pairs.size()},
                {"udp", r.udp.holds}};
    if (r.note) {
        out["note"] = *r.note;
    }
    json peripherals = json::array();
    for (const auto& p : r.peripherals) {
        peripherals.push_back(to_json(p));
    }
    out["peripherals"] = peripherals;
    if (r.udp.counterexample) {
        out["counterexample"] = to_json(*r.udp.counterexample);
    }
    if (r.chains) {
        out["chains"] = to_json(*r.chains);
    }
    return out;
}

}  // namespace relhyp::json_io
