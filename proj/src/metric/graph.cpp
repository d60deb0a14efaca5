#include "relhyp/metric.hpp"

#include <functional>
#include <queue>

namespace relhyp::metric {

template <class W>
std::uint64_t BasicMetricGraph<W>::key(std::size_t a, std::size_t b) {
    if (a > b) {
        std::swap(a, b);
    }
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

template <class W>
std::size_t BasicMetricGraph<W>::add_vertex(const std::string& name) {
    if (index_.count(name)) {
        throw InputError("duplicate vertex '" + name + "'");
    }
    index_.emplace(name, names_.size());
    names_.push_back(name);
    adj_.emplace_back();
    return names_.size() - 1;
}

template <class W>
void BasicMetricGraph<W>::add_edge(std::size_t a, std::size_t b, const W& weight) {
    if (a >= size() || b >= size()) {
        throw InputError("edge endpoint out of range");
    }
    if (a == b) {
        throw InputError("loop at vertex '" + names_[a] + "'");
    }
    if (!(weight > 0)) {
        throw InputError("edge '" + names_[a] + "'-'" + names_[b] + "' has non-positive weight");
    }
    const auto k = key(a, b);
    const auto it = edge_index_.find(k);
    if (it == edge_index_.end()) {
        edge_index_.emplace(k, edges_.size());
        edges_.push_back({std::min(a, b), std::max(a, b), weight});
        adj_[a].emplace_back(b, weight);
        adj_[b].emplace_back(a, weight);
        return;
    }
    Edge& e = edges_[it->second];
    if (!(weight < e.weight)) {
        return;
    }
    e.weight = weight;
    for (auto& [v, w] : adj_[a]) {
        if (v == b) {
            w = weight;
        }
    }
    for (auto& [v, w] : adj_[b]) {
        if (v == a) {
            w = weight;
        }
    }
}

template <class W>
void BasicMetricGraph<W>::add_edge(std::string_view a, std::string_view b, const W& weight) {
    add_edge(require(a), require(b), weight);
}

template <class W>
std::optional<std::size_t> BasicMetricGraph<W>::index_of(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

template <class W>
std::size_t BasicMetricGraph<W>::require(std::string_view name) const {
    const auto i = index_of(name);
    if (!i) {
        throw InputError("unknown vertex '" + std::string(name) + "'");
    }
    return *i;
}

template <class W>
std::optional<W> BasicMetricGraph<W>::weight(std::size_t a, std::size_t b) const {
    const auto it = edge_index_.find(key(a, b));
    if (it == edge_index_.end()) {
        return std::nullopt;
    }
    return edges_[it->second].weight;
}

template class BasicMetricGraph<double>;
template class BasicMetricGraph<Rational>;

RationalMetricGraph to_rational(const MetricGraph& g) {
    RationalMetricGraph out;
    for (const auto& n : g.names()) {
        out.add_vertex(n);
    }
    for (const auto& e : g.edges()) {
        out.add_edge(e.a, e.b, Rational(e.weight));
    }
    return out;
}

template <class W>
W BasicDistanceMatrix<W>::diameter() const {
    W best{};
    for (const auto& x : d_) {
        if (best < x) {
            best = x;
        }
    }
    return best;
}

template class BasicDistanceMatrix<double>;
template class BasicDistanceMatrix<Rational>;

template <class W>
std::vector<std::optional<W>> distances_from(const BasicMetricGraph<W>& g, std::size_t source) {
    std::vector<std::optional<W>> dist(g.size());
    std::vector<bool> done(g.size(), false);
    using Item = std::pair<W, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[source] = W{};
    queue.emplace(W{}, source);
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (done[v]) {
            continue;
        }
        done[v] = true;
        for (const auto& [u, w] : g.neighbors(v)) {
            W candidate = d + w;
            if (!done[u] && (!dist[u] || candidate < *dist[u])) {
                dist[u] = candidate;
                queue.emplace(std::move(candidate), u);
            }
        }
    }
    return dist;
}

template <class W>
BasicDistanceMatrix<W> shortest_paths(const BasicMetricGraph<W>& g) {
    const std::size_t n = g.size();
    // Compressed adjacency for cache-friendly repeated scans.
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + g.neighbors(v).size();
    }
    std::vector<std::uint32_t> target(offset[n]);
    std::vector<W> length(offset[n]);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t k = offset[v];
        for (const auto& [u, w] : g.neighbors(v)) {
            target[k] = static_cast<std::uint32_t>(u);
            length[k++] = w;
        }
    }
    BasicDistanceMatrix<W> out(n);
    std::vector<char> reached(n);
    std::vector<char> done(n);
    using Item = std::pair<W, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(reached.begin(), reached.end(), 0);
        std::fill(done.begin(), done.end(), 0);
        W* dist = &out(s, 0);
        dist[s] = W{};
        reached[s] = 1;
        queue.emplace(W{}, static_cast<std::uint32_t>(s));
        while (!queue.empty()) {
            const std::uint32_t v = queue.top().second;
            queue.pop();
            if (done[v]) {
                continue;
            }
            done[v] = 1;
            const W dv = dist[v];
            for (std::size_t k = offset[v]; k < offset[v + 1]; ++k) {
                const std::uint32_t u = target[k];
                if (done[u]) {
                    continue;
                }
                W candidate = dv + length[k];
                if (!reached[u] || candidate < dist[u]) {
                    reached[u] = 1;
                    dist[u] = candidate;
                    queue.emplace(std::move(candidate), u);
                }
            }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (!reached[t]) {
                throw DisconnectedError("graph is disconnected: no path from '" + g.name(s) + "' to '" +
                                        g.name(t) + "'");
            }
        }
    }
    return out;
}

template std::vector<std::optional<double>> distances_from(const MetricGraph&, std::size_t);
template std::vector<std::optional<Rational>> distances_from(const RationalMetricGraph&, std::size_t);
template DistanceMatrix shortest_paths(const MetricGraph&);
template RationalDistanceMatrix shortest_paths(const RationalMetricGraph&);

}  // namespace relhyp::metric
