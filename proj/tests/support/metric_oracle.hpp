#pragma once

// Reference computations for the metric engine: cubic all-pairs shortest
// paths and the four-point delta over every quadruple.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "relhyp/metric.hpp"

namespace oracle {

using relhyp::metric::MetricGraph;

using Dense = std::vector<std::vector<double>>;

inline Dense floyd_warshall(const MetricGraph& g) {
    const std::size_t n = g.size();
    const double inf = std::numeric_limits<double>::infinity();
    Dense d(n, std::vector<double>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
    }
    for (const auto& e : g.edges()) {
        d[e.a][e.b] = std::min(d[e.a][e.b], e.weight);
        d[e.b][e.a] = std::min(d[e.b][e.a], e.weight);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

/// max over all quadruples of (S1 - S2) / 2.
inline double naive_delta(const Dense& d) {
    const std::size_t n = d.size();
    double best = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t e = c + 1; e < n; ++e) {
                    double s[3] = {d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
                    std::sort(s, s + 3);
                    best = std::max(best, (s[2] - s[1]) / 2);
                }
            }
        }
    }
    return best;
}

/// Connected graph: a random spanning tree plus extra edges with
/// probability p. Integer weights in [1, max_weight] when `integral`, else
/// uniform in [0.1, max_weight].
inline MetricGraph random_metric_graph(std::mt19937_64& rng, std::size_t n, double p, double max_weight,
                                       bool integral) {
    MetricGraph g;
    for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex("v" + std::to_string(v));
    }
    auto weight = [&]() {
        if (integral) {
            return static_cast<double>(1 + rng() % static_cast<std::uint64_t>(max_weight));
        }
        return std::uniform_real_distribution<double>(0.1, max_weight)(rng);
    };
    for (std::size_t v = 1; v < n; ++v) {
        g.add_edge(v, rng() % v, weight());
    }
    std::bernoulli_distribution extra(p);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (extra(rng)) {
                g.add_edge(a, b, weight());
            }
        }
    }
    return g;
}

inline MetricGraph grid(std::size_t k) {
    MetricGraph g;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            g.add_vertex(std::to_string(i) + "," + std::to_string(j));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i + 1 < k) {
                g.add_edge(i * k + j, (i + 1) * k + j, 1.0);
            }
            if (j + 1 < k) {
                g.add_edge(i * k + j, i * k + j + 1, 1.0);
            }
        }
    }
    return g;
}

inline MetricGraph path(std::size_t n, double weight = 1.0) {
    MetricGraph g;
    for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex("p" + std::to_string(v));
        if (v > 0) {
            g.add_edge(v - 1, v, weight);
        }
    }
    return g;
}

inline MetricGraph scaled(const MetricGraph& g, double lambda) {
    MetricGraph out;
    for (const auto& n : g.names()) {
        out.add_vertex(n);
    }
    for (const auto& e : g.edges()) {
        out.add_edge(e.a, e.b, e.weight * lambda);
    }
    return out;
}

/// min over k >= 0 of 2k + d e^{-k}: rise k levels, cross, descend.
inline double horoball_bracket(double d) {
    double best = d;
    for (int k = 1; k < 60; ++k) {
        best = std::min(best, 2.0 * k + d * std::exp(-static_cast<double>(k)));
    }
    return best;
}

}  // namespace oracle
