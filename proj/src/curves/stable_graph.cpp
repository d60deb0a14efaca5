#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "relhyp/curves.hpp"

namespace relhyp::curves {

std::string to_string(SurfaceType s) {
    return "S_{" + std::to_string(s.g) + "," + std::to_string(s.n) + "}";
}

StableGraph::StableGraph(std::vector<Piece> pieces, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : pieces_(std::move(pieces)), edges_(std::move(edges)) {
    if (pieces_.size() > max_stable_graph_vertices) {
        throw InputError("stable graph has " + std::to_string(pieces_.size()) + " vertices, more than " +
                         std::to_string(max_stable_graph_vertices));
    }
    for (const auto& p : pieces_) {
        if (p.genus < 0 || p.legs < 0) {
            throw InputError("negative genus or leg count");
        }
    }
    mult_.assign(pieces_.size(), std::vector<int>(pieces_.size(), 0));
    for (auto& [a, b] : edges_) {
        if (a >= pieces_.size() || b >= pieces_.size()) {
            throw InputError("edge endpoint out of range");
        }
        if (a > b) {
            std::swap(a, b);
        }
        ++mult_[a][b];
        if (a != b) {
            ++mult_[b][a];
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

StableGraph StableGraph::trivial(SurfaceType s) {
    return StableGraph({{s.g, s.n}}, {});
}

int StableGraph::valence(std::size_t v) const {
    int k = 0;
    for (std::size_t u = 0; u < size(); ++u) {
        k += u == v ? 2 * mult_[v][v] : mult_[v][u];
    }
    return k;
}

int StableGraph::betti() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(size()) + 1;
}

int StableGraph::genus() const {
    int g = betti();
    for (const auto& p : pieces_) {
        g += p.genus;
    }
    return g;
}

int StableGraph::legs() const {
    int n = 0;
    for (const auto& p : pieces_) {
        n += p.legs;
    }
    return n;
}

std::vector<VertexMask> StableGraph::components(VertexMask mask) const {
    std::vector<VertexMask> out;
    VertexMask left = mask;
    while (left != 0) {
        VertexMask comp = left & (~left + 1);
        VertexMask frontier = comp;
        while (frontier != 0) {
            const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            for (std::size_t u = 0; u < size(); ++u) {
                const VertexMask bit = VertexMask{1} << u;
                if ((left & bit) && !(comp & bit) && mult_[v][u] > 0) {
                    comp |= bit;
                    frontier |= bit;
                }
            }
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool StableGraph::connected(VertexMask mask) const {
    return mask != 0 && components(mask).size() == 1;
}

bool stable_piece(const StableGraph& g, std::size_t v) {
    return 2 * g.piece(v).genus - 2 + g.boundary(v) > 0;
}

std::optional<std::string> invalid_reason(const StableGraph& g) {
    if (g.size() == 0) {
        return "stable graph has no vertices";
    }
    if (!g.connected(g.all())) {
        return "stable graph is disconnected";
    }
    if (g.is_trivial()) {
        return std::nullopt;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!stable_piece(g, v)) {
            return "vertex " + std::to_string(v) + " is a piece of genus " + std::to_string(g.piece(v).genus) +
                   " with " + std::to_string(g.boundary(v)) + " boundary components, which is not stable";
        }
    }
    return std::nullopt;
}

void validate(const StableGraph& g) {
    if (auto why = invalid_reason(g)) {
        throw InputError(*why);
    }
}

canon::CanonicalForm canonical_form(const StableGraph& g, const std::vector<int>& marks) {
    canon::ColoredMultigraph cg;
    cg.color.resize(g.size());
    cg.multiplicity.assign(g.size(), std::vector<int>(g.size(), 0));
    for (std::size_t v = 0; v < g.size(); ++v) {
        const int mark = marks.empty() ? 0 : marks[v];
        cg.color[v] = (mark * 1024 + g.piece(v).genus) * 1024 + g.piece(v).legs;
        for (std::size_t u = 0; u < g.size(); ++u) {
            cg.multiplicity[v][u] = g.multiplicity(v, u);
        }
    }
    return canon::canonical_form(cg);
}

StableGraph relabel(const StableGraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.size()) {
        throw InputError("permutation size does not match the graph");
    }
    std::vector<std::size_t> position(g.size());
    std::vector<Piece> pieces(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        pieces[v] = g.piece(perm[v]);
        position[perm[v]] = v;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : g.edges()) {
        edges.emplace_back(position[a], position[b]);
    }
    return StableGraph(std::move(pieces), std::move(edges));
}

StableGraph canonical_relabel(const StableGraph& g) {
    return relabel(g, canonical_form(g).order);
}

StableGraph contract(const StableGraph& g, const std::vector<VertexMask>& blocks) {
    std::vector<std::size_t> block_of(g.size(), blocks.size());
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!g.connected(blocks[i]) || (blocks[i] & ~g.all())) {
            throw InputError("contraction block " + mask_id(blocks[i]) + " is not a connected vertex set");
        }
        Piece p;
        int vertices = 0;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (blocks[i] >> v & 1) {
                if (block_of[v] != blocks.size()) {
                    throw InputError("contraction blocks overlap");
                }
                block_of[v] = i;
                p.genus += g.piece(v).genus;
                p.legs += g.piece(v).legs;
                ++vertices;
            }
        }
        p.genus += 1 - vertices;
        pieces.push_back(p);
    }
    if (std::count(block_of.begin(), block_of.end(), blocks.size()) != 0) {
        throw InputError("contraction blocks do not cover the graph");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [a, b] : g.edges()) {
        if (block_of[a] == block_of[b]) {
            ++pieces[block_of[a]].genus;
        } else {
            edges.emplace_back(block_of[a], block_of[b]);
        }
    }
    return StableGraph(std::move(pieces), std::move(edges));
}

namespace {

/// One-curve degenerations: a loop at a piece with genus, or a split of a
/// piece into two joined by a new edge.
void degenerations(const StableGraph& g, std::vector<StableGraph>& out) {
    const std::size_t n = g.size();
    for (std::size_t v = 0; v < n; ++v) {
        const Piece p = g.piece(v);
        if (p.genus > 0 && 2 * (p.genus - 1) - 2 + g.boundary(v) + 2 > 0) {
            auto pieces = g.pieces();
            --pieces[v].genus;
            auto edges = g.edges();
            edges.emplace_back(v, v);
            out.emplace_back(std::move(pieces), std::move(edges));
        }
        // Half-edges at v: (edge index, which end).
        std::vector<std::pair<std::size_t, int>> halves;
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto [a, b] = g.edges()[e];
            if (a == v) {
                halves.emplace_back(e, 0);
            }
            if (b == v) {
                halves.emplace_back(e, 1);
            }
        }
        const std::size_t h = halves.size();
        for (std::uint64_t side = 0; side < (std::uint64_t{1} << h); ++side) {
            const int h1 = std::popcount(side);
            const int h2 = static_cast<int>(h) - h1;
            for (int g1 = 0; g1 <= p.genus; ++g1) {
                for (int l1 = 0; l1 <= p.legs; ++l1) {
                    const int g2 = p.genus - g1;
                    const int l2 = p.legs - l1;
                    if (2 * g1 - 2 + h1 + l1 + 1 <= 0 || 2 * g2 - 2 + h2 + l2 + 1 <= 0) {
                        continue;
                    }
                    auto pieces = g.pieces();
                    pieces[v] = {g1, l1};
                    pieces.push_back({g2, l2});
                    auto edges = g.edges();
                    for (std::size_t k = 0; k < h; ++k) {
                        if (side >> k & 1) {
                            continue;
                        }
                        auto& e = edges[halves[k].first];
                        (halves[k].second == 0 ? e.first : e.second) = n;
                    }
                    edges.emplace_back(v, n);
                    out.emplace_back(std::move(pieces), std::move(edges));
                }
            }
        }
    }
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(SurfaceType s, int bound) {
    if (s.g < 0 || s.n < 0) {
        throw InputError("surface " + to_string(s) + " has negative genus or punctures");
    }
    if (s.xi() < 0) {
        throw InputError("surface " + to_string(s) + " has negative complexity");
    }
    if (2 * s.g + s.n > bound) {
        throw ResourceLimitExceeded("surface " + to_string(s) + " exceeds the enumeration bound 2g+n <= " +
                                    std::to_string(bound));
    }
    std::map<std::vector<int>, StableGraph> all;
    std::vector<StableGraph> level{StableGraph::trivial(s)};
    all.emplace(canonical_form(level.front()).code, canonical_relabel(level.front()));
    std::vector<StableGraph> next;
    std::vector<StableGraph> scratch;
    while (!level.empty()) {
        next.clear();
        for (const auto& g : level) {
            scratch.clear();
            degenerations(g, scratch);
            for (auto& h : scratch) {
                const auto form = canonical_form(h);
                if (all.count(form.code)) {
                    continue;
                }
                auto c = relabel(h, form.order);
                validate(c);
                all.emplace(form.code, c);
                next.push_back(std::move(c));
            }
        }
        std::swap(level, next);
    }
    std::vector<StableGraph> out;
    out.reserve(all.size());
    for (auto& [code, g] : all) {
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace relhyp::curves
