#include "relhyp/json_io.hpp"

#include <cmath>

namespace relhyp::json_io {

namespace {

using boost::multiprecision::cpp_int;
using metric::Rational;

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Rational parse_rational(const std::string& text, const std::string& path) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto integer = [&](const std::string& s) {
        const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
        if (!ok) {
            throw SchemaError(path, "expected a rational \"p/q\", got \"" + text + "\"");
        }
        return cpp_int(s);
    };
    const cpp_int d = integer(den);
    if (d == 0) {
        throw SchemaError(path, "zero denominator in \"" + text + "\"");
    }
    return Rational(integer(num), d);
}

template <class W, class ParseWeight>
metric::BasicMetricGraph<W> graph_from_json(const json& j, ParseWeight parse_weight) {
    if (!j.is_object()) {
        throw SchemaError("", "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "vertices" && key != "edges") {
            throw SchemaError("/" + key, "unknown key");
        }
    }
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw SchemaError("/vertices", "expected an array of vertex names");
    }
    metric::BasicMetricGraph<W> g;
    const json& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string()) {
            throw SchemaError(at("/vertices", i), "expected a vertex name");
        }
        try {
            g.add_vertex(vs[i].get<std::string>());
        } catch (const InputError& e) {
            throw SchemaError(at("/vertices", i), e.what());
        }
    }
    if (!j.contains("edges")) {
        return g;
    }
    const json& es = j.at("edges");
    if (!es.is_array()) {
        throw SchemaError("/edges", "expected an array");
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string path = at("/edges", i);
        const json& e = es[i];
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
            throw SchemaError(path, "expected [\"u\", \"v\", weight], got " + e.dump());
        }
        const W w = parse_weight(e[2], at(path, 2));
        try {
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), w);
        } catch (const InputError& err) {
            throw SchemaError(path, err.what());
        }
    }
    return g;
}

template <class W, class EmitWeight>
json graph_to_json(const metric::BasicMetricGraph<W>& g, EmitWeight emit) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(json::array({g.name(e.a), g.name(e.b), emit(e.weight)}));
    }
    return {{"vertices", g.names()}, {"edges", std::move(edges)}};
}

json rational_value(const Rational& r) {
    if (denominator(r) == 1) {
        const cpp_int n = numerator(r);
        if (boost::multiprecision::abs(n) < (cpp_int(1) << 53)) {
            return n.convert_to<long long>();
        }
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

template <class W>
json delta_json(const metric::BasicDeltaReport<W>& r, const metric::BasicMetricGraph<W>& g, json delta) {
    json out = {{"delta", std::move(delta)},
                {"mode", r.mode == metric::DeltaMode::exact ? "exact" : "sampled"}};
    json quad = json::array();
    if (g.size() > 0) {
        for (std::size_t v : r.quadruple) {
            quad.push_back(g.name(v));
        }
    }
    out["quadruple"] = std::move(quad);
    if (r.mode == metric::DeltaMode::sampled) {
        out["samples"] = r.samples;
        out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    } else {
        out["far_apart_pairs"] = r.far_apart_pairs;
    }
    return out;
}

}  // namespace

metric::MetricGraph metric_graph_from_json(const json& j) {
    return graph_from_json<double>(j, [](const json& w, const std::string& path) {
        double value = 0;
        if (w.is_number()) {
            value = w.get<double>();
        } else if (w.is_string()) {
            value = parse_rational(w.get<std::string>(), path).convert_to<double>();
        } else {
            throw SchemaError(path, "expected a numeric weight");
        }
        if (!std::isfinite(value) || value <= 0) {
            throw SchemaError(path, "weight must be positive and finite");
        }
        return value;
    });
}

metric::RationalMetricGraph rational_metric_graph_from_json(const json& j) {
    return graph_from_json<Rational>(j, [](const json& w, const std::string& path) {
        Rational value;
        if (w.is_number_integer()) {
            value = Rational(w.get<long long>());
        } else if (w.is_number()) {
            const double x = w.get<double>();
            if (!std::isfinite(x)) {
                throw SchemaError(path, "weight must be finite");
            }
            value = Rational(x);
        } else if (w.is_string()) {
            value = parse_rational(w.get<std::string>(), path);
        } else {
            throw SchemaError(path, "expected a numeric weight");
        }
        if (value <= 0) {
            throw SchemaError(path, "weight must be positive");
        }
        return value;
    });
}

json to_json(const metric::MetricGraph& g) {
    return graph_to_json(g, [](double w) { return json(w); });
}

json to_json(const metric::RationalMetricGraph& g) { return graph_to_json(g, rational_value); }

json to_json(const metric::DeltaReport& r, const metric::MetricGraph& g) { return delta_json(r, g, r.delta); }

json to_json(const metric::RationalDeltaReport& r, const metric::RationalMetricGraph& g) {
    json out = delta_json(r, g, r.delta.convert_to<double>());
    out["delta_exact"] = numerator(r.delta).str() + "/" + denominator(r.delta).str();
    return out;
}

json to_json(const metric::AuditReport& r, const metric::MetricGraph& base) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"pair", {base.name(row.u), base.name(row.v)}},
                        {"base_distance", row.base_distance},
                        {"horoball_distance", row.horoball_distance},
                        {"log_distance", row.log_distance}});
    }
    json out = {{"rows", std::move(rows)}, {"constant", r.constant}, {"within_cap", r.within_cap()}};
    out["cap"] = r.cap ? json(*r.cap) : json(nullptr);
    return out;
}

}  // namespace relhyp::json_io
