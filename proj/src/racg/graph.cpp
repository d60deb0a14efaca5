#include "relhyp/racg.hpp"

#include <algorithm>

namespace relhyp::racg {

std::vector<std::size_t> VertexSet::members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(__builtin_ctzll(b)));
    }
    return out;
}

Graph::Graph(const std::vector<std::string>& names,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    for (const auto& n : names) {
        add_vertex(n);
    }
    for (const auto& [a, b] : edges) {
        add_edge(a, b);
    }
}

std::size_t Graph::add_vertex(const std::string& name) {
    if (name.empty()) {
        throw InputError("empty vertex name");
    }
    if (names_.size() == max_vertices) {
        throw InputError("more than " + std::to_string(max_vertices) + " vertices");
    }
    if (!index_.emplace(name, names_.size()).second) {
        throw InputError("duplicate vertex '" + name + "'");
    }
    names_.push_back(name);
    adj_.emplace_back();
    return names_.size() - 1;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size()) {
        throw InputError("edge endpoint out of range");
    }
    if (a == b) {
        throw InputError("loop at vertex '" + names_[a] + "'");
    }
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void Graph::add_edge(std::string_view a, std::string_view b) { add_edge(require(a), require(b)); }

std::optional<std::size_t> Graph::index_of(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Graph::require(std::string_view name) const {
    if (auto i = index_of(name)) {
        return *i;
    }
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b : adj_[a].members()) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

VertexSet Graph::set_of(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) {
        s.insert(require(n));
    }
    return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
    std::vector<std::string> out;
    for (std::size_t v : s.members()) {
        out.push_back(names_[v]);
    }
    return out;
}

std::string Graph::format(VertexSet s) const {
    std::string out = "{";
    for (std::size_t v : s.members()) {
        if (out.size() > 1) {
            out += ',';
        }
        out += names_[v];
    }
    return out + "}";
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
    std::vector<std::string> names(size());
    for (std::size_t v = 0; v < size(); ++v) {
        names[perm[v]] = names_[v];
    }
    Graph out;
    for (const auto& n : names) {
        out.add_vertex(n);
    }
    for (const auto& [a, b] : edges()) {
        out.add_edge(perm[a], perm[b]);
    }
    return out;
}

VertexSet link(const Graph& g, VertexSet a) {
    VertexSet out = g.all();
    for (std::size_t v : a.members()) {
        out = out & g.neighbors(v);
    }
    return out;
}

VertexSet star(const Graph& g, VertexSet a) { return a | link(g, a); }

bool is_complete(const Graph& g, VertexSet a) {
    for (std::size_t v : a.members()) {
        if (!(a - VertexSet::single(v)).subset_of(g.neighbors(v))) {
            return false;
        }
    }
    return true;
}

SubgraphInfo subgraph_query(const Graph& g, VertexSet a) {
    if (!a.subset_of(g.all())) {
        throw InputError("vertex set is not contained in the graph");
    }
    const VertexSet lk = link(g, a);
    return {is_complete(g, a), lk, a | lk};
}

bool is_nontrivial_join(const Graph& g, VertexSet a) {
    // A splits as a join exactly along unions of components of its complement
    // graph; both sides are non-complete iff two such components have a non-edge.
    int big_components = 0;
    VertexSet rest = a;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.members().front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (std::size_t v : frontier.members()) {
                next = next | ((a - g.neighbors(v)) - VertexSet::single(v));
            }
            frontier = next - comp;
            comp = comp | next;
        }
        rest = rest - comp;
        if (comp.size() >= 2) {
            ++big_components;
        }
    }
    return big_components >= 2;
}

std::vector<Square> induced_squares(const Graph& g) {
    std::vector<VertexSet> non_edges;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (!g.adjacent(a, b)) {
                non_edges.push_back(VertexSet::single(a) | VertexSet::single(b));
            }
        }
    }
    std::vector<Square> out;
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
        const VertexSet p = non_edges[i];
        const VertexSet lk = link(g, p);
        for (std::size_t j = i + 1; j < non_edges.size(); ++j) {
            const VertexSet q = non_edges[j];
            if (q.subset_of(lk)) {
                out.push_back({p, q});
            }
        }
    }
    return out;
}

}  // namespace relhyp::racg
