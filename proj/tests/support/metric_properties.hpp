#pragma once

// Randomized and fixed-case checks for the metric engine, shared by the unit
// tests and the acceptance gate.

#include <cmath>
#include <random>
#include <string>

#include "hhs_properties.hpp"
#include "metric_oracle.hpp"

namespace props {

inline bool close(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Dijkstra against Floyd-Warshall and exact delta against the quadruple
/// loop on random weighted graphs with at most `max_n` vertices.
inline Outcome delta_oracle_equivalence(std::uint64_t seed, int graphs, std::size_t max_n) {
    namespace metric = relhyp::metric;
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < graphs; ++t) {
        const std::size_t n = 4 + rng() % (max_n - 3);
        const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
        const bool integral = t % 2 == 0;
        const auto g = oracle::random_metric_graph(rng, n, p, integral ? 6 : 5.0, integral);
        const std::string tag = "seed " + std::to_string(seed) + " graph " + std::to_string(t) + " (" +
                                std::to_string(n) + " vertices)";
        ++out.cases;
        ++out.tally[integral ? "integer weights" : "real weights"];
        const auto d = metric::shortest_paths(g);
        const auto fw = oracle::floyd_warshall(g);
        bool same = true;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                same = same && close(d(a, b), fw[a][b]);
            }
        }
        if (!same) {
            out.fail(tag + ": shortest paths differ from Floyd-Warshall");
            continue;
        }
        const auto r = metric::four_point_delta(g, d);
        const double expected = oracle::naive_delta(fw);
        if (!close(r.delta, expected)) {
            out.fail(tag + ": delta " + std::to_string(r.delta) + " vs oracle " + std::to_string(expected));
        }
        const auto& q = r.quadruple;
        if (!close(metric::quadruple_delta(d, q[0], q[1], q[2], q[3]), r.delta)) {
            out.fail(tag + ": reported quadruple does not attain delta");
        }
    }
    return out;
}

/// Random weighted trees have delta exactly zero, in double and rational mode.
inline Outcome tree_delta(std::uint64_t seed, int trees, std::size_t max_n) {
    namespace metric = relhyp::metric;
    Outcome out;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trees; ++t) {
        const std::size_t n = 2 + rng() % (max_n - 1);
        const auto g = oracle::random_metric_graph(rng, n, 0.0, 9, true);
        ++out.cases;
        const auto r = metric::four_point_delta(g);
        const auto exact = metric::four_point_delta(metric::to_rational(g));
        if (r.delta != 0 || exact.delta != 0) {
            out.fail("tree " + std::to_string(t) + " on " + std::to_string(n) + " vertices has delta " +
                     std::to_string(r.delta));
        }
    }
    return out;
}

/// Multiplying every weight by λ multiplies exact delta by λ.
inline Outcome delta_scaling(std::uint64_t seed, int graphs, std::size_t max_n) {
    namespace metric = relhyp::metric;
    Outcome out;
    std::mt19937_64 rng(seed);
    const double lambdas[] = {0.5, 3.0, 7.25, 1000.0};
    for (int t = 0; t < graphs; ++t) {
        const std::size_t n = 4 + rng() % (max_n - 3);
        const auto g = oracle::random_metric_graph(rng, n, 0.2, 5.0, t % 2 == 0);
        const double base = metric::four_point_delta(g).delta;
        for (double lambda : lambdas) {
            ++out.cases;
            const double scaled = metric::four_point_delta(oracle::scaled(g, lambda)).delta;
            if (!close(scaled, lambda * base)) {
                out.fail("graph " + std::to_string(t) + ": delta " + std::to_string(scaled) + " after scaling by " +
                         std::to_string(lambda) + ", expected " + std::to_string(lambda * base));
            }
        }
    }
    return out;
}

struct AuditOutcome {
    Outcome outcome;
    relhyp::metric::AuditReport report;
    double max_pruning_gap = 0;
};

/// Horoball over a path of `length` unit edges with net spacing `spacing`:
/// log-distance constant on the given base distances and entrywise
/// agreement of pruned and unpruned distance matrices.
inline AuditOutcome horoball_audit(std::size_t length, double spacing, const std::vector<std::size_t>& distances,
                                   double cap) {
    namespace metric = relhyp::metric;
    AuditOutcome res;
    const auto base = oracle::path(length + 1);
    const auto d = metric::shortest_paths(base);
    const auto net = metric::epsilon_net(base, d, spacing);
    const int depth = metric::default_depth(d.diameter());
    const auto pruned = metric::build_horoball(base, d, net.points, depth, true);
    const auto full = metric::build_horoball(base, d, net.points, depth, false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x : distances) {
        pairs.emplace_back(0, x);
    }
    res.report = metric::log_distance_audit(pruned, base, pairs, cap);
    ++res.outcome.cases;
    if (!res.report.within_cap()) {
        res.outcome.fail("log-distance constant " + std::to_string(res.report.constant) + " exceeds " +
                         std::to_string(cap));
    }
    const auto dp = metric::shortest_paths(pruned.graph);
    const auto df = metric::shortest_paths(full.graph);
    ++res.outcome.cases;
    for (std::size_t a = 0; a < dp.size(); ++a) {
        for (std::size_t b = 0; b < dp.size(); ++b) {
            res.max_pruning_gap = std::max(res.max_pruning_gap, std::abs(dp(a, b) - df(a, b)));
        }
    }
    if (res.max_pruning_gap > 1e-9) {
        res.outcome.fail("pruned and unpruned horoballs differ by " + std::to_string(res.max_pruning_gap));
    }
    res.outcome.tally["horoball vertices"] = pruned.graph.size();
    res.outcome.tally["pruned edges"] = pruned.graph.edges().size();
    res.outcome.tally["unpruned edges"] = full.graph.edges().size();
    return res;
}

}  // namespace props
