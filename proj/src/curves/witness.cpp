#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "relhyp/curves.hpp"

namespace relhyp::curves {

std::string_view to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::sep:
            return "sep";
        case WitnessKind::pants:
            return "pants";
        case WitnessKind::cut:
            break;
    }
    return "cut";
}

std::optional<WitnessKind> parse_witness_kind(std::string_view s) {
    for (WitnessKind k : {WitnessKind::sep, WitnessKind::pants, WitnessKind::cut}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string mask_id(VertexMask m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t v = 0; m >> v; ++v) {
        if (m >> v & 1) {
            out += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
    }
    return out + "}";
}

namespace {

/// Genus and legs of the subsurface spanned by a connected mask, and the
/// number of edges leaving it.
struct Span {
    int genus = 0;
    int legs = 0;
    int crossing = 0;
};

Span span(const StableGraph& g, VertexMask m) {
    Span s;
    int internal = 0;
    for (const auto& [a, b] : g.edges()) {
        const bool ina = m >> a & 1;
        const bool inb = m >> b & 1;
        internal += ina && inb;
        s.crossing += ina != inb;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (m >> v & 1) {
            s.genus += g.piece(v).genus;
            s.legs += g.piece(v).legs;
        }
    }
    s.genus += internal - std::popcount(m) + 1;
    return s;
}

}  // namespace

FilledSubsurface filled_subsurface(const StableGraph& g, VertexMask a) {
    if (a == 0 || (a & ~g.all()) != 0) {
        throw InputError("vertex set " + mask_id(a) + " is empty or out of range");
    }
    if (!g.connected(a)) {
        throw InputError("vertex set " + mask_id(a) + " is disconnected");
    }
    const Span s = span(g, a);
    FilledSubsurface f;
    f.genus = s.genus;
    f.legs = s.legs;
    f.curve_boundary = s.crossing;
    for (VertexMask c : g.components(g.all() & ~a)) {
        const Span t = span(g, c);
        f.complement.push_back({c, t.genus, t.legs, t.crossing});
    }
    return f;
}

bool is_witness(WitnessKind kind, const StableGraph& g, VertexMask a) {
    const FilledSubsurface f = filled_subsurface(g, a);
    if (a == g.all() || f.is_pants()) {
        return false;
    }
    switch (kind) {
        case WitnessKind::sep:
            return std::all_of(f.complement.begin(), f.complement.end(),
                               [](const ComplementComponent& c) { return c.genus == 0 && c.legs <= 1; });
        case WitnessKind::pants:
            return f.xi() >= 1;
        case WitnessKind::cut:
            break;
    }
    return f.genus >= 1;
}

std::vector<WitnessType> witness_types(WitnessKind kind, const std::vector<StableGraph>& graphs) {
    std::map<std::vector<int>, WitnessType> found;
    for (const auto& g : graphs) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            const VertexMask w = VertexMask{1} << v;
            if (!is_witness(kind, g, w)) {
                continue;
            }
            std::vector<VertexMask> blocks{w};
            for (VertexMask c : g.components(g.all() & ~w)) {
                blocks.push_back(c);
            }
            const StableGraph h = contract(g, blocks);
            std::vector<int> marks(h.size(), 0);
            marks[0] = 1;
            const auto form = canonical_form(h, marks);
            if (found.count(form.code)) {
                continue;
            }
            WitnessType t;
            t.graph = relabel(h, form.order);
            for (std::size_t k = 0; k < form.order.size(); ++k) {
                if (form.order[k] == 0) {
                    t.witness = VertexMask{1} << k;
                }
            }
            t.filled = filled_subsurface(t.graph, t.witness);
            found.emplace(form.code, std::move(t));
        }
    }
    std::vector<WitnessType> out;
    for (auto& [code, t] : found) {
        out.push_back(std::move(t));
    }
    return out;
}

bool complementary(const StableGraph& g, VertexMask a, VertexMask b) {
    return (a & b) == 0 && (a | b) == g.all();
}

namespace {

std::pair<std::vector<int>, DisjointPair> normalized(const StableGraph& g, VertexMask a, VertexMask b) {
    if ((a & b) != 0) {
        throw InputError("vertex sets " + mask_id(a) + " and " + mask_id(b) + " overlap");
    }
    std::vector<VertexMask> blocks{a, b};
    for (VertexMask c : g.components(g.all() & ~(a | b))) {
        blocks.push_back(c);
    }
    const StableGraph h = contract(g, blocks);
    std::vector<int> marks(h.size(), 0);
    marks[0] = 1;
    marks[1] = 2;
    auto forward = canonical_form(h, marks);
    std::swap(marks[0], marks[1]);
    auto backward = canonical_form(h, marks);
    const bool swap = backward.code < forward.code;
    auto& form = swap ? backward : forward;
    DisjointPair p;
    p.graph = relabel(h, form.order);
    for (std::size_t k = 0; k < form.order.size(); ++k) {
        if (form.order[k] == (swap ? 1u : 0u)) {
            p.a = VertexMask{1} << k;
        }
        if (form.order[k] == (swap ? 0u : 1u)) {
            p.b = VertexMask{1} << k;
        }
    }
    p.complementary = complementary(p.graph, p.a, p.b);
    return {std::move(form.code), std::move(p)};
}

}  // namespace

DisjointPair normalize_pair(const StableGraph& g, VertexMask a, VertexMask b) {
    return normalized(g, a, b).second;
}

std::vector<DisjointPair> disjoint_witness_pairs(WitnessKind kind, const std::vector<StableGraph>& graphs) {
    // Every configuration of two disjoint witnesses is the pair of single
    // vertices of its own coarse stable graph, so single vertices suffice.
    std::map<std::vector<int>, DisjointPair> found;
    std::vector<VertexMask> witnesses;
    for (const auto& g : graphs) {
        witnesses.clear();
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (is_witness(kind, g, VertexMask{1} << v)) {
                witnesses.push_back(VertexMask{1} << v);
            }
        }
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
                auto [code, p] = normalized(g, witnesses[i], witnesses[j]);
                found.try_emplace(std::move(code), std::move(p));
            }
        }
    }
    std::vector<DisjointPair> out;
    for (auto& [code, p] : found) {
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<DisjointPair> disjoint_witness_pairs(WitnessKind kind, SurfaceType s) {
    return disjoint_witness_pairs(kind, enumerate_stable_graphs(s));
}

UdpResult unique_disjoint_pairs(const std::vector<DisjointPair>& pairs) {
    UdpResult r;
    // Pairs are sorted by canonical code, which leads with the vertex count.
    for (const auto& p : pairs) {
        if (!p.complementary) {
            r.holds = false;
            r.counterexample = p;
            break;
        }
    }
    return r;
}

UdpResult unique_disjoint_pairs(WitnessKind kind, SurfaceType s) {
    return unique_disjoint_pairs(disjoint_witness_pairs(kind, s));
}

namespace {

bool is_pants_decomposition(const StableGraph& g) {
    if (g.edges().empty()) {
        return false;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.piece(v).genus != 0 || g.boundary(v) != 3) {
            return false;
        }
    }
    return true;
}

}  // namespace

namespace {

/// Configurations (W, V) up to homeomorphism, numbered as they are met.
class ChainStates {
public:
    std::size_t id(const StableGraph& g, VertexMask w, VertexMask v) {
        std::vector<VertexMask> blocks;
        std::vector<int> marks;
        const VertexMask atoms[] = {w & ~v, v & ~w, w & v, g.all() & ~(w | v)};
        for (int k = 0; k < 4; ++k) {
            for (VertexMask c : g.components(atoms[k])) {
                blocks.push_back(c);
                marks.push_back(k == 3 ? 0 : k + 1);
            }
        }
        const StableGraph h = contract(g, blocks);
        auto form = canonical_form(h, marks);
        const auto [it, fresh] = ids_.try_emplace(std::move(form.code), steps_.size());
        if (fresh) {
            ChainStep step;
            step.graph = relabel(h, form.order);
            for (std::size_t k = 0; k < form.order.size(); ++k) {
                const int mark = marks[form.order[k]];
                step.witness |= static_cast<VertexMask>(mark & 1) << k;
                step.target |= static_cast<VertexMask>(mark >> 1 & 1) << k;
            }
            steps_.push_back(std::move(step));
        }
        return it->second;
    }

    std::size_t size() const { return steps_.size(); }
    const ChainStep& step(std::size_t s) const { return steps_[s]; }

private:
    std::map<std::vector<int>, std::size_t> ids_;
    std::vector<ChainStep> steps_;
};

}  // namespace

ChainEvidence chain_witnesses(WitnessKind kind, const std::vector<StableGraph>& graphs, int length_bound) {
    ChainEvidence ev;
    ev.length_bound = length_bound;
    ChainStates states;
    std::set<std::pair<std::size_t, std::size_t>> moves;
    std::set<std::size_t> starts;
    for (const auto& g : graphs) {
        if (!is_pants_decomposition(g)) {
            continue;
        }
        ++ev.decompositions;
        std::vector<VertexMask> inst;
        for (VertexMask m = 1; m < g.all(); ++m) {
            if (g.connected(m) && is_witness(kind, g, m)) {
                inst.push_back(m);
            }
        }
        std::vector<VertexMask> targets;
        for (VertexMask m : inst) {
            if (std::binary_search(inst.begin(), inst.end(), g.all() & ~m)) {
                targets.push_back(m);
            }
        }
        std::vector<std::size_t> ids(inst.size());
        for (VertexMask v : targets) {
            for (std::size_t i = 0; i < inst.size(); ++i) {
                ids[i] = states.id(g, inst[i], v);
                if (inst[i] != v && std::binary_search(targets.begin(), targets.end(), inst[i])) {
                    starts.insert(ids[i]);
                }
            }
            for (std::size_t i = 0; i < inst.size(); ++i) {
                for (std::size_t j = 0; j < inst.size(); ++j) {
                    if ((inst[i] & inst[j]) == 0) {
                        moves.emplace(ids[j], ids[i]);
                    }
                }
            }
        }
    }
    ev.states = states.size();
    ev.pairs = starts.size();

    // Breadth-first search backwards from the states with W = V.
    const std::size_t n = states.size();
    std::vector<std::vector<std::size_t>> back(n);
    for (const auto& [to, from] : moves) {
        back[to].push_back(from);
    }
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> next(n, n);
    std::queue<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        if (states.step(s).witness == states.step(s).target) {
            dist[s] = 0;
            queue.push(s);
        }
    }
    while (!queue.empty()) {
        const std::size_t t = queue.front();
        queue.pop();
        for (std::size_t s : back[t]) {
            if (dist[s] < 0) {
                dist[s] = dist[t] + 1;
                next[s] = t;
                queue.push(s);
            }
        }
    }
    ev.found = true;
    for (std::size_t s : starts) {
        const int length = dist[s] < 0 ? -1 : dist[s] + 1;
        if (length < 0 || length > length_bound) {
            ev.found = false;
            ev.chain = {states.step(s)};
            return ev;
        }
        if (length > ev.max_length) {
            ev.max_length = length;
            ev.chain.clear();
            for (std::size_t k = s; k != n; k = next[k]) {
                ev.chain.push_back(states.step(k));
            }
        }
    }
    return ev;
}

ChainEvidence chain_witnesses(WitnessKind kind, SurfaceType s, int length_bound) {
    return chain_witnesses(kind, enumerate_stable_graphs(s), length_bound);
}

}  // namespace relhyp::curves
