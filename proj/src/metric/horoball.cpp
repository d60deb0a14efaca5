#include "relhyp/metric.hpp"

#include <cmath>
#include <map>
#include <set>

namespace relhyp::metric {

namespace {

std::vector<std::size_t> greedy_net(const DistanceMatrix& d, const std::vector<std::size_t>& order, double epsilon) {
    if (!(epsilon > 0)) {
        throw InputError("net separation must be positive");
    }
    std::vector<std::size_t> net;
    for (std::size_t v : order) {
        bool separated = true;
        for (std::size_t p : net) {
            if (d(v, p) < epsilon) {
                separated = false;
                break;
            }
        }
        if (separated) {
            net.push_back(v);
        }
    }
    return net;
}

void check_vertices(std::size_t n, const std::vector<std::size_t>& vs, const std::string& what) {
    std::set<std::size_t> seen;
    for (std::size_t v : vs) {
        if (v >= n) {
            throw InputError(what + " contains out-of-range vertex " + std::to_string(v));
        }
        if (!seen.insert(v).second) {
            throw InputError(what + " repeats vertex " + std::to_string(v));
        }
    }
}

void check_depth(int depth) {
    if (depth < 1 || depth > max_horoball_depth) {
        throw InputError("horoball depth must lie in [1, " + std::to_string(max_horoball_depth) + "], got " +
                         std::to_string(depth));
    }
}

/// Adds levels 1..depth over `net` to `out` (whose first vertices are the
/// base) and all horizontal edges from level 0 up. Returns the index of the
/// first added vertex; level n ≥ 1 occupies a block of net.size() vertices.
std::size_t attach(MetricGraph& out, const DistanceMatrix& d, const std::vector<std::size_t>& net, int depth,
                   bool prune, const std::string& prefix) {
    const std::size_t first = out.size();
    const std::size_t k = net.size();
    for (int level = 1; level <= depth; ++level) {
        for (std::size_t x : net) {
            out.add_vertex(prefix + out.name(x) + "#" + std::to_string(level));
        }
    }
    auto at = [&](std::size_t i, int level) {
        return level == 0 ? net[i] : first + static_cast<std::size_t>(level - 1) * k + i;
    };
    for (int level = 0; level <= depth; ++level) {
        const double scale = std::exp(-static_cast<double>(level));
        for (std::size_t i = 0; i < k; ++i) {
            if (level < depth) {
                out.add_edge(at(i, level), at(i, level + 1), 1.0);
            }
            for (std::size_t j = i + 1; j < k; ++j) {
                const double len = scale * d(net[i], net[j]);
                if (prune && level < depth && len > prune_threshold) {
                    continue;
                }
                out.add_edge(at(i, level), at(j, level), len);
            }
        }
    }
    return first;
}

MetricGraph copy_base(const MetricGraph& base) {
    MetricGraph out;
    for (const auto& n : base.names()) {
        out.add_vertex(n);
    }
    for (const auto& e : base.edges()) {
        out.add_edge(e.a, e.b, e.weight);
    }
    return out;
}

}  // namespace

EpsilonNet epsilon_net(const MetricGraph& g, const DistanceMatrix& d, double epsilon) {
    std::vector<std::size_t> order(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        order[v] = v;
    }
    EpsilonNet out;
    out.epsilon = epsilon;
    out.points = greedy_net(d, order, epsilon);
    for (std::size_t p : out.points) {
        out.approximation.add_vertex(g.name(p));
    }
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        for (std::size_t j = i + 1; j < out.points.size(); ++j) {
            const double dist = d(out.points[i], out.points[j]);
            if (dist < 2 * epsilon) {
                out.approximation.add_edge(i, j, dist);
            }
        }
    }
    return out;
}

EpsilonNet epsilon_net(const MetricGraph& g, double epsilon) {
    if (!(epsilon > 0)) {
        throw InputError("net separation must be positive");
    }
    return epsilon_net(g, shortest_paths(g), epsilon);
}

int default_depth(double diameter) {
    if (!(diameter > 1)) {
        return 2;
    }
    return static_cast<int>(std::ceil(std::log(diameter))) + 2;
}

std::size_t Horoball::vertex(std::size_t net_position, int level) const {
    if (level == 0) {
        return net[net_position];
    }
    return base_size + static_cast<std::size_t>(level - 1) * net.size() + net_position;
}

Horoball build_horoball(const MetricGraph& base, const DistanceMatrix& d, const std::vector<std::size_t>& net,
                        int depth, bool prune) {
    check_depth(depth);
    check_vertices(base.size(), net, "net");
    if (d.size() != base.size()) {
        throw InputError("distance matrix does not match the graph");
    }
    Horoball h;
    h.graph = copy_base(base);
    h.base_size = base.size();
    h.net = net;
    h.depth = depth;
    attach(h.graph, d, net, depth, prune, "");
    return h;
}

Horoball build_horoball(const MetricGraph& base, const std::vector<std::size_t>& net, int depth, bool prune) {
    check_depth(depth);
    check_vertices(base.size(), net, "net");
    return build_horoball(base, shortest_paths(base), net, depth, prune);
}

CuspedSpace build_cusped(const MetricGraph& base, const std::vector<std::vector<std::size_t>>& regions,
                         const CuspOptions& options) {
    if (options.depth) {
        check_depth(*options.depth);
    }
    std::set<std::vector<std::size_t>> distinct;
    for (std::size_t k = 0; k < regions.size(); ++k) {
        const std::string what = "region " + std::to_string(k);
        if (regions[k].empty()) {
            throw InputError(what + " is empty");
        }
        check_vertices(base.size(), regions[k], what);
        auto sorted = regions[k];
        std::sort(sorted.begin(), sorted.end());
        if (!distinct.insert(std::move(sorted)).second) {
            throw InputError(what + " repeats an earlier region");
        }
    }
    CuspedSpace out;
    out.graph = copy_base(base);
    out.base_size = base.size();
    if (regions.empty()) {
        return out;
    }
    const DistanceMatrix d = shortest_paths(base);
    for (std::size_t k = 0; k < regions.size(); ++k) {
        auto order = regions[k];
        std::sort(order.begin(), order.end());
        double diam = 0;
        for (std::size_t a : order) {
            for (std::size_t b : order) {
                diam = std::max(diam, d(a, b));
            }
        }
        const int depth = options.depth.value_or(default_depth(diam));
        check_depth(depth);
        auto net = greedy_net(d, order, options.epsilon);
        attach(out.graph, d, net, depth, options.prune, "P" + std::to_string(k) + ":");
        out.nets.push_back(std::move(net));
        out.depths.push_back(depth);
    }
    return out;
}

template <class W>
BasicMetricGraph<W> build_factored(const BasicMetricGraph<W>& base, const std::vector<std::vector<std::size_t>>& regions) {
    BasicMetricGraph<W> out;
    for (const auto& n : base.names()) {
        out.add_vertex(n);
    }
    for (const auto& e : base.edges()) {
        out.add_edge(e.a, e.b, e.weight);
    }
    for (std::size_t k = 0; k < regions.size(); ++k) {
        for (std::size_t v : regions[k]) {
            if (v >= base.size()) {
                throw InputError("region " + std::to_string(k) + " contains out-of-range vertex " +
                                 std::to_string(v));
            }
        }
        for (std::size_t a = 0; a < regions[k].size(); ++a) {
            for (std::size_t b = a + 1; b < regions[k].size(); ++b) {
                if (regions[k][a] != regions[k][b]) {
                    out.add_edge(regions[k][a], regions[k][b], W(1));
                }
            }
        }
    }
    return out;
}

template MetricGraph build_factored(const MetricGraph&, const std::vector<std::vector<std::size_t>>&);
template RationalMetricGraph build_factored(const RationalMetricGraph&, const std::vector<std::vector<std::size_t>>&);

AuditReport log_distance_audit(const Horoball& h, const MetricGraph& base,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               std::optional<double> cap) {
    if (base.size() != h.base_size) {
        throw InputError("base graph does not match the horoball");
    }
    const std::set<std::size_t> in_net(h.net.begin(), h.net.end());
    std::map<std::size_t, std::vector<std::optional<double>>> base_rows;
    std::map<std::size_t, std::vector<std::optional<double>>> ball_rows;
    AuditReport report;
    report.cap = cap;
    for (const auto& [u, v] : pairs) {
        for (std::size_t x : {u, v}) {
            if (!in_net.count(x)) {
                throw InputError("audit pair vertex " + (x < base.size() ? "'" + base.name(x) + "'" : std::to_string(x)) +
                                 " is not a net point");
            }
        }
        if (!base_rows.count(u)) {
            base_rows.emplace(u, distances_from(base, u));
            ball_rows.emplace(u, distances_from(h.graph, u));
        }
        const auto& bx = base_rows.at(u)[v];
        const auto& hx = ball_rows.at(u)[v];
        if (!bx || !hx) {
            throw DisconnectedError("no path from '" + base.name(u) + "' to '" + base.name(v) + "'");
        }
        AuditRow row{u, v, *bx, *hx, std::log(std::max(1.0, *bx))};
        report.constant = std::max({report.constant, row.log_distance / (row.horoball_distance + 1),
                                    row.horoball_distance / (row.log_distance + 1)});
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace relhyp::metric
