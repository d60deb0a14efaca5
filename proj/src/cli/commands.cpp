#include "relhyp/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <variant>

#include "relhyp/hhs.hpp"
#include "relhyp/metric.hpp"
#include "relhyp/racg.hpp"

namespace relhyp::cli {

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

json to_json(const Provenance& p) {
    return {{"command_line", p.command_line}, {"input_hash", p.input_hash}, {"version", p.version}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string format_number(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

json names_list(const racg::Graph& g, const std::vector<racg::VertexSet>& sets) {
    json out = json::array();
    for (const auto s : sets) {
        out.push_back(g.names_of(s));
    }
    return out;
}

json mask_members(curves::VertexMask m) {
    json out = json::array();
    for (std::size_t v = 0; m != 0; ++v, m >>= 1) {
        if (m & 1) {
            out.push_back(v);
        }
    }
    return out;
}

/// Provenance comment lines ahead of CSV output.
void csv_provenance(std::ostream& out, const Provenance& p) {
    out << "# relhyp " << p.version << "\n# command: " << p.command_line << "\n# input: " << p.input_hash << "\n";
}

}  // namespace

json racg_classify(const std::string& graph_text, const Provenance& p) {
    const auto g = racg::parse_graph(graph_text);
    const auto r = racg::find_peripheral_collection(g);
    json violations = json::array();
    for (const auto& v : r.certificate.violations) {
        violations.push_back({{"clause", v.clause}, {"witnesses", names_list(g, v.witnesses)}});
    }
    json out = {{"status", to_string(r.verdict)},
                {"peripherals", names_list(g, r.peripherals)},
                {"closures", names_list(g, r.closures)},
                {"provenance", to_json(p)}};
    if (r.verdict == Verdict::relatively_hyperbolic) {
        out["certificate"] = {{"holds", r.certificate.holds()}, {"violations", violations}};
    }
    if (r.verdict == Verdict::not_relatively_hyperbolic) {
        out["counterexample"] = "a forced closure is the whole vertex set, so no proper collection exists";
    }
    return out;
}

std::string curves_survey(curves::WitnessKind kind, int bound, const curves::ClassifyOptions& options, Format format,
                          const Provenance& p) {
    const auto rows = curves::survey(kind, bound, options);
    std::ostringstream out;
    if (format == Format::json) {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back(json_io::to_json(r));
        }
        out << json{{"rows", list}, {"provenance", to_json(p)}}.dump(2) << "\n";
        return out.str();
    }
    csv_provenance(out, p);
    out << "kind,g,n,xi,verdict,witness_types,disjoint_pairs,udp,chain_length,note\n";
    for (const auto& r : rows) {
        std::string chain;
        if (r.chains && r.chains->found) {
            chain = std::to_string(r.chains->max_length);
        }
        out << curves::to_string(kind) << ',' << r.surface.g << ',' << r.surface.n << ',' << r.surface.xi() << ','
            << to_string(r.verdict) << ',' << r.witness_types << ',' << r.pairs.size() << ','
            << (r.udp.holds ? "true" : "false") << ',' << chain << ',' << csv_field(r.note.value_or("")) << "\n";
    }
    return out.str();
}

json curves_classify(curves::WitnessKind kind, curves::SurfaceType s, const curves::ClassifyOptions& options,
                     const Provenance& p) {
    auto out = json_io::to_json(curves::classify(kind, s, options));
    out["provenance"] = to_json(p);
    return out;
}

json curves_graph(curves::WitnessKind kind, const std::string& graph_json, const Provenance& p) {
    const auto g = json_io::stable_graph_from_json(json_io::parse_text(graph_json));
    if (auto why = curves::undefined_reason(kind, g.surface())) {
        throw InputError(*why);
    }
    std::vector<curves::VertexMask> witnesses;
    json wit = json::array();
    for (curves::VertexMask m = 1; m < g.all(); ++m) {
        if (g.connected(m) && curves::is_witness(kind, g, m)) {
            witnesses.push_back(m);
            const auto f = curves::filled_subsurface(g, m);
            wit.push_back({{"vertices", mask_members(m)},
                           {"surface", curves::to_string(curves::SurfaceType{f.genus, f.boundary()})}});
        }
    }
    json pairs = json::array();
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
            const auto a = witnesses[i];
            const auto b = witnesses[j];
            if ((a & b) == 0) {
                pairs.push_back({{"a", mask_members(a)},
                                 {"b", mask_members(b)},
                                 {"complementary", curves::complementary(g, a, b)}});
            }
        }
    }
    const auto structure = curves::stable_graph_index_structure(g, kind);
    const auto ids = curves::complementary_domain_ids(g, kind);
    const auto validation = hhs::validate_structure(structure);
    json isolation;
    const auto result = hhs::check_isolated_orthogonality(structure, ids);
    if (const auto* cert = std::get_if<hhs::IsolationCertificate>(&result)) {
        isolation = {{"isolated", true}, {"certificate", json_io::to_json(*cert)}};
    } else {
        isolation = {{"isolated", false}, {"violation", json_io::to_json(std::get<hhs::IsolationViolation>(result))}};
    }
    return {{"kind", curves::to_string(kind)},
            {"graph", json_io::to_json(g)},
            {"surface", curves::to_string(g.surface())},
            {"witnesses", wit},
            {"disjoint_pairs", pairs},
            {"structure", json_io::to_json(structure)},
            {"validation", json_io::to_json(validation)},
            {"complementary_domains", ids},
            {"isolation", isolation},
            {"provenance", to_json(p)}};
}

json curves_enumerate(curves::SurfaceType s, int bound, const Provenance& p) {
    json graphs = json::array();
    for (const auto& g : curves::enumerate_stable_graphs(s, bound)) {
        graphs.push_back(json_io::to_json(g));
    }
    return {{"surface", curves::to_string(s)},
            {"count", graphs.size()},
            {"graphs", graphs},
            {"provenance", to_json(p)}};
}

void experiment_rh_delta(const std::string& graph_text, const RhDeltaOptions& options, std::ostream& out,
                         const Provenance& p) {
    if (options.radius_min > options.radius_max) {
        throw InputError("radius range is empty");
    }
    const auto g = racg::parse_graph(graph_text);
    const auto j = racg::find_peripheral_collection(g).peripherals;
    csv_provenance(out, p);
    out << "radius,ball_size,regions,cusped_size,delta_plain,delta_factored,delta_cusped,wall_ms\n";
    for (std::size_t r = options.radius_min; r <= options.radius_max; ++r) {
        try {
            const auto start = std::chrono::steady_clock::now();
            const auto ball = racg::cayley_ball(g, r, options.cap_vertices);
            const auto plain = metric::cayley_metric_graph(g, ball);
            const auto regions = metric::coset_regions(g, ball, j);
            const auto cusped = metric::build_cusped(plain, regions, {options.depth, 1.0, options.prune});
            if (cusped.graph.size() > options.cap_vertices) {
                throw ResourceLimitExceeded("cusped space has " + std::to_string(cusped.graph.size()) +
                                            " vertices, cap is " + std::to_string(options.cap_vertices));
            }
            const double d_plain = metric::four_point_delta(plain).delta;
            const double d_factored = metric::four_point_delta(metric::build_factored(plain, regions)).delta;
            const double d_cusped = metric::four_point_delta(cusped.graph).delta;
            const auto ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            out << r << ',' << ball.size() << ',' << regions.size() << ',' << cusped.graph.size() << ','
                << format_number(d_plain) << ',' << format_number(d_factored) << ',' << format_number(d_cusped)
                << ',' << format_number(std::round(ms * 10) / 10) << "\n";
        } catch (const ResourceLimitExceeded& e) {
            out << "# warning: radius " << r << " stopped: " << e.what() << "\n";
            throw;
        }
    }
}

json metric_delta(const std::string& graph_json, std::optional<std::uint64_t> seed, std::size_t samples,
                  const Provenance& p) {
    const auto g = json_io::metric_graph_from_json(json_io::parse_text(graph_json));
    metric::DeltaOptions options;
    if (seed) {
        options.mode = metric::DeltaMode::sampled;
        options.seed = seed;
        options.samples = samples;
    }
    auto out = json_io::to_json(metric::four_point_delta(g, options), g);
    out["provenance"] = to_json(p);
    return out;
}

json hhs_validate(const std::string& structure_json, bool clean_containers, const Provenance& p) {
    const auto s = json_io::index_structure_from_json(json_io::parse_text(structure_json));
    hhs::ValidationOptions options;
    options.check_clean_containers = clean_containers;
    const auto report = hhs::validate_structure(s, options);
    auto out = json_io::to_json(report);
    if (report.valid()) {
        const auto r = hhs::rank(s);
        out["complexity"] = hhs::complexity(s);
        out["rank"] = {{"rank", r.rank}, {"witness", r.witness}};
    }
    out["provenance"] = to_json(p);
    return out;
}

json hhs_isolate(const std::string& structure_json, const std::optional<std::vector<std::string>>& isolating,
                 const Provenance& p) {
    const auto s = json_io::index_structure_from_json(json_io::parse_text(structure_json));
    const auto validation = hhs::validate_structure(s);
    std::optional<hhs::IsolationCertificate> cert;
    json out;
    if (isolating) {
        const auto result = hhs::check_isolated_orthogonality(s, *isolating);
        if (const auto* c = std::get_if<hhs::IsolationCertificate>(&result)) {
            cert = *c;
        } else {
            out["violation"] = json_io::to_json(std::get<hhs::IsolationViolation>(result));
        }
    } else {
        cert = hhs::find_isolating_collection(s);
    }
    out["valid"] = validation.valid();
    if (!validation.valid()) {
        out["validation"] = json_io::to_json(validation);
    }
    if (cert) {
        out["isolated"] = true;
        out["certificate"] = json_io::to_json(*cert);
        if (!validation.valid()) {
            out["status"] = to_string(Verdict::inconclusive);
            out["reason"] = "the structure fails validation";
        } else {
            const auto skeleton = hhs::derive_relative_skeleton(s, *cert);
            out["status"] = to_string(cert->isolating_set.empty() ? Verdict::hyperbolic
                                                                   : Verdict::relatively_hyperbolic);
            out["peripherals"] = cert->isolating_set;
            out["skeleton"] = json_io::to_json(skeleton);
        }
    } else {
        out["isolated"] = false;
        out["status"] = to_string(Verdict::inconclusive);
        out["reason"] = isolating ? "the given collection does not isolate orthogonality"
                                  : "no collection of candidate domains isolates orthogonality";
    }
    out["provenance"] = to_json(p);
    return out;
}

}  // namespace relhyp::cli
