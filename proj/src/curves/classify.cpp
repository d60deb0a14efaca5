#include <algorithm>
#include <functional>

#include "relhyp/curves.hpp"

namespace relhyp::curves {

std::optional<std::string> undefined_reason(WitnessKind kind, SurfaceType s) {
    if (s.g < 0 || s.n < 0) {
        return "surface " + to_string(s) + " has negative genus or punctures";
    }
    switch (kind) {
        case WitnessKind::sep:
            if (2 * s.g + s.n < 4) {
                return to_string(s) + " has no separating curves";
            }
            break;
        case WitnessKind::pants:
            if (s.xi() < 1) {
                return to_string(s) + " has complexity " + std::to_string(s.xi()) + " < 1";
            }
            break;
        case WitnessKind::cut:
            if (s.n != 0) {
                return "cut systems are taken on closed surfaces, not " + to_string(s);
            }
            if (s.g < 1) {
                return "the sphere has no cut systems";
            }
            break;
    }
    return std::nullopt;
}

std::optional<std::string> surface_note(WitnessKind kind, SurfaceType s) {
    if (kind != WitnessKind::sep) {
        return std::nullopt;
    }
    if (s == SurfaceType{2, 1}) {
        return "excluded: S != S_{2,1}";
    }
    if (s == SurfaceType{0, 4} || s == SurfaceType{1, 2} || s == SurfaceType{2, 0}) {
        return "exceptional: disconnected; edges join curves meeting at most 4 times";
    }
    return std::nullopt;
}

std::string peripheral_name(const DisjointPair& p) {
    const auto fa = filled_subsurface(p.graph, p.a);
    const auto fb = filled_subsurface(p.graph, p.b);
    return "C(" + to_string({fa.genus, fa.boundary()}) + ") x C(" + to_string({fb.genus, fb.boundary()}) + ")";
}

CurvesReport classify(WitnessKind kind, const std::vector<StableGraph>& graphs, const ClassifyOptions& options) {
    if (graphs.empty()) {
        throw InputError("no stable graphs given");
    }
    CurvesReport r;
    r.kind = kind;
    r.surface = graphs.front().surface();
    if (auto why = undefined_reason(kind, r.surface)) {
        throw InputError(*why);
    }
    r.note = surface_note(kind, r.surface);
    r.witness_types = witness_types(kind, graphs).size();
    r.pairs = disjoint_witness_pairs(kind, graphs);
    r.udp = unique_disjoint_pairs(r.pairs);
    if (r.pairs.empty()) {
        r.verdict = Verdict::hyperbolic;
    } else if (r.udp.holds) {
        r.verdict = Verdict::relatively_hyperbolic;
        r.peripherals = r.pairs;
    } else {
        r.chains = chain_witnesses(kind, graphs, options.chain_length_bound);
        r.verdict = r.chains->found ? Verdict::not_relatively_hyperbolic : Verdict::inconclusive;
    }
    return r;
}

CurvesReport classify(WitnessKind kind, SurfaceType s, const ClassifyOptions& options) {
    if (auto why = undefined_reason(kind, s)) {
        throw InputError(*why);
    }
    return classify(kind, enumerate_stable_graphs(s, options.enumeration_bound), options);
}

std::vector<CurvesReport> survey(WitnessKind kind, int bound, const ClassifyOptions& options) {
    if (bound > options.enumeration_bound) {
        throw ResourceLimitExceeded("survey bound " + std::to_string(bound) + " exceeds the enumeration bound " +
                                    std::to_string(options.enumeration_bound));
    }
    std::vector<CurvesReport> out;
    for (int total = 0; total <= bound; ++total) {
        for (int g = 0; 2 * g <= total; ++g) {
            const SurfaceType s{g, total - 2 * g};
            if (!undefined_reason(kind, s)) {
                out.push_back(classify(kind, s, options));
            }
        }
    }
    return out;
}

namespace {

std::vector<VertexMask> witness_instances(const StableGraph& g, WitnessKind kind) {
    validate(g);
    std::vector<VertexMask> out;
    for (VertexMask m = 1; m < g.all(); ++m) {
        if (g.connected(m) && is_witness(kind, g, m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::string family_id(const std::vector<VertexMask>& family) {
    std::string id;
    for (VertexMask m : family) {
        id += (id.empty() ? "" : "+") + mask_id(m);
    }
    return id;
}

}  // namespace

hhs::IndexStructure stable_graph_index_structure(const StableGraph& g, WitnessKind kind, std::size_t max_domains) {
    const auto inst = witness_instances(g, kind);
    std::vector<std::vector<VertexMask>> families;
    std::vector<VertexMask> current;
    std::function<void(std::size_t, VertexMask)> grow = [&](std::size_t from, VertexMask used) {
        for (std::size_t i = from; i < inst.size(); ++i) {
            if ((inst[i] & used) != 0) {
                continue;
            }
            current.push_back(inst[i]);
            families.push_back(current);
            if (families.size() + 1 > max_domains) {
                throw ResourceLimitExceeded("index structure exceeds " + std::to_string(max_domains) + " domains");
            }
            grow(i + 1, used | inst[i]);
            current.pop_back();
        }
    };
    grow(0, 0);

    hhs::IndexStructure s;
    s.domains.push_back({"S", true});
    std::vector<VertexMask> unions;
    for (const auto& f : families) {
        s.domains.push_back({family_id(f), true});
        VertexMask u = 0;
        for (VertexMask m : f) {
            u |= m;
        }
        unions.push_back(u);
    }
    auto inside = [](const std::vector<VertexMask>& small, const std::vector<VertexMask>& big) {
        return std::all_of(small.begin(), small.end(), [&](VertexMask m) {
            return std::any_of(big.begin(), big.end(), [&](VertexMask b) { return (m & ~b) == 0; });
        });
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        const std::string& id = s.domains[i + 1].id;
        s.nest.emplace_back(id, "S");
        for (std::size_t j = 0; j < families.size(); ++j) {
            if (i != j && inside(families[i], families[j])) {
                s.nest.emplace_back(id, s.domains[j + 1].id);
            }
            if (i < j && (unions[i] & unions[j]) == 0) {
                s.orth.emplace_back(id, s.domains[j + 1].id);
            }
        }
    }
    return s;
}

std::vector<std::string> complementary_domain_ids(const StableGraph& g, WitnessKind kind) {
    const auto inst = witness_instances(g, kind);
    std::vector<std::string> out;
    for (VertexMask m : inst) {
        const VertexMask rest = g.all() & ~m;
        if (m < rest && std::binary_search(inst.begin(), inst.end(), rest)) {
            out.push_back(family_id({m, rest}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace relhyp::curves
