#pragma once

// Finite weighted-graph geometry: shortest paths, the four-point Gromov
// delta, epsilon-nets, combinatorial horoballs, cusped and factored spaces.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relhyp/errors.hpp"
#include "relhyp/racg.hpp"

namespace relhyp::metric {

using Rational = boost::multiprecision::cpp_rational;

/// Comparison tolerance for double weights, relative to max(1, |a|, |b|).
inline constexpr double tolerance = 1e-9;

inline bool approx_equal(double a, double b) {
    const double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
    return (a > b ? a - b : b - a) <= tolerance * scale;
}
inline bool approx_equal(const Rational& a, const Rational& b) { return a == b; }

/// Finite undirected graph with positive edge weights. Parallel edges are
/// collapsed to the minimum weight; loops are rejected.
template <class W>
class BasicMetricGraph {
public:
    struct Edge {
        std::size_t a;
        std::size_t b;
        W weight;
    };

    BasicMetricGraph() = default;

    /// Throws InputError on duplicate names.
    std::size_t add_vertex(const std::string& name);
    /// Throws InputError on loops, unknown vertices and non-positive weights.
    void add_edge(std::size_t a, std::size_t b, const W& weight);
    void add_edge(std::string_view a, std::string_view b, const W& weight);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    /// (neighbor, weight) pairs in insertion order.
    const std::vector<std::pair<std::size_t, W>>& neighbors(std::size_t v) const { return adj_[v]; }
    /// Each edge once, with a < b, in insertion order.
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<W> weight(std::size_t a, std::size_t b) const;

private:
    static std::uint64_t key(std::size_t a, std::size_t b);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> edge_index_;
    std::vector<std::vector<std::pair<std::size_t, W>>> adj_;
};

using MetricGraph = BasicMetricGraph<double>;
using RationalMetricGraph = BasicMetricGraph<Rational>;

/// Same graph with exact rational weights (doubles convert exactly).
RationalMetricGraph to_rational(const MetricGraph& g);

/// Dense symmetric matrix of shortest-path distances.
template <class W>
class BasicDistanceMatrix {
public:
    BasicDistanceMatrix() = default;
    explicit BasicDistanceMatrix(std::size_t n) : n_(n), d_(n * n) {}

    std::size_t size() const { return n_; }
    const W& operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    W& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    const W* row(std::size_t i) const { return d_.data() + i * n_; }
    W diameter() const;

private:
    std::size_t n_ = 0;
    std::vector<W> d_;
};

using DistanceMatrix = BasicDistanceMatrix<double>;
using RationalDistanceMatrix = BasicDistanceMatrix<Rational>;

/// Raised for queries on a disconnected graph; names one separated pair.
class DisconnectedError : public InputError {
public:
    using InputError::InputError;
};

/// Dijkstra from one source; unreachable vertices are left as nullopt.
template <class W>
std::vector<std::optional<W>> distances_from(const BasicMetricGraph<W>& g, std::size_t source);

/// Dijkstra from every vertex. Throws DisconnectedError.
template <class W>
BasicDistanceMatrix<W> shortest_paths(const BasicMetricGraph<W>& g);

// Four-point delta.

enum class DeltaMode { exact, sampled };

struct DeltaOptions {
    DeltaMode mode = DeltaMode::exact;
    /// Required in sampled mode.
    std::optional<std::uint64_t> seed;
    std::size_t samples = 100000;
};

template <class W>
struct BasicDeltaReport {
    /// Largest (S1 - S2) / 2 found, S1 >= S2 >= S3 the three pairing sums.
    W delta{};
    DeltaMode mode = DeltaMode::exact;
    std::size_t samples = 0;
    std::optional<std::uint64_t> seed;
    /// A quadruple attaining `delta`; all zeros for graphs with one vertex.
    std::array<std::size_t, 4> quadruple{};
    /// Far-apart pairs scanned (exact mode).
    std::size_t far_apart_pairs = 0;
};

using DeltaReport = BasicDeltaReport<double>;
using RationalDeltaReport = BasicDeltaReport<Rational>;

/// (S1 - S2) / 2 for one quadruple.
template <class W>
W quadruple_delta(const BasicDistanceMatrix<W>& d, std::size_t a, std::size_t b, std::size_t c,
                  std::size_t e);

/// Exact mode restricts the larger pairing to far-apart pairs (neither end
/// lies on a geodesic from the other end to a third vertex), scans pairs by
/// decreasing distance and stops once half the smaller distance cannot beat
/// the best value. Sampled mode draws quadruples uniformly and reports a
/// lower bound. Throws InputError in sampled mode without a seed.
template <class W>
BasicDeltaReport<W> four_point_delta(const BasicMetricGraph<W>& g, const BasicDistanceMatrix<W>& d,
                                     const DeltaOptions& options = {});
template <class W>
BasicDeltaReport<W> four_point_delta(const BasicMetricGraph<W>& g, const DeltaOptions& options = {});

// Nets.

struct EpsilonNet {
    double epsilon = 0;
    /// Base vertex indices, increasing.
    std::vector<std::size_t> points;
    /// Net points joined by an edge of length d(x, y) whenever d(x, y) < 2ε.
    MetricGraph approximation;
};

/// Greedy maximal ε-separated set in vertex order: a vertex joins when its
/// distance to every earlier point is at least ε. Throws InputError for ε <= 0.
EpsilonNet epsilon_net(const MetricGraph& g, const DistanceMatrix& d, double epsilon);
EpsilonNet epsilon_net(const MetricGraph& g, double epsilon);

// Horoballs.

inline constexpr int max_horoball_depth = 39;

/// Horizontal edges longer than this at a level below the top are never
/// shorter than going up one level, across and down: l > 2 + l / e.
inline constexpr double prune_threshold = 2 * 2.718281828459045 / (2.718281828459045 - 1);

/// ⌈ln diam⌉ + 2, at least 1.
int default_depth(double diameter);

struct Horoball {
    MetricGraph graph;
    /// Base vertices keep their indices 0..base_size-1.
    std::size_t base_size = 0;
    std::vector<std::size_t> net;
    int depth = 0;
    /// Index of (net[i], level) in `graph`; level 0 is the base vertex.
    std::size_t vertex(std::size_t net_position, int level) const;
};

/// Base graph plus net × {1..D}: unit vertical edges and, at every level n
/// from 0 to D, an edge of length e^{-n} d(x, y) between net points x, y.
/// Level-n vertices are named "<name>#n". With `prune`, horizontal edges
/// longer than prune_threshold are dropped below the top level. Throws
/// InputError unless 1 <= D <= max_horoball_depth and the net is a set of
/// base vertices.
Horoball build_horoball(const MetricGraph& base, const DistanceMatrix& d, const std::vector<std::size_t>& net,
                        int depth, bool prune = true);
Horoball build_horoball(const MetricGraph& base, const std::vector<std::size_t>& net, int depth,
                        bool prune = true);

struct CuspOptions {
    /// Depth for every region; by default each region uses default_depth of
    /// its diameter in the base metric.
    std::optional<int> depth;
    /// Net separation inside each region.
    double epsilon = 1.0;
    bool prune = true;
};

struct CuspedSpace {
    MetricGraph graph;
    std::size_t base_size = 0;
    /// Per region: its net (base indices) and depth.
    std::vector<std::vector<std::size_t>> nets;
    std::vector<int> depths;
};

/// Attaches one horoball per region, based on an ε-net of the region in the
/// base metric. Region k's level-n vertices are named "P<k>:<name>#n".
/// Throws InputError on empty, repeated or out-of-range regions.
CuspedSpace build_cusped(const MetricGraph& base, const std::vector<std::vector<std::size_t>>& regions,
                         const CuspOptions& options = {});

/// Adds a unit edge between every two vertices of each region, keeping
/// shorter existing edges. Throws InputError on out-of-range vertices.
template <class W>
BasicMetricGraph<W> build_factored(const BasicMetricGraph<W>& base,
                                   const std::vector<std::vector<std::size_t>>& regions);

struct AuditRow {
    std::size_t u = 0;
    std::size_t v = 0;
    double base_distance = 0;
    double horoball_distance = 0;
    /// ln max(1, base distance).
    double log_distance = 0;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    /// Least L >= 1 with log ≤ L·d_H + L and d_H ≤ L·log + L on every row.
    double constant = 1;
    std::optional<double> cap;
    bool within_cap() const { return !cap || constant <= *cap; }
};

/// Compares horoball distances with logarithms of base distances for pairs
/// of base vertices. Throws InputError if a pair leaves the net.
AuditReport log_distance_audit(const Horoball& h, const MetricGraph& base,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               std::optional<double> cap = std::nullopt);

// Cayley balls.

/// Unit-weight graph of a Cayley ball; vertices named by format_word.
MetricGraph cayley_metric_graph(const racg::Graph& g, const racg::CayleyBall& ball);

/// Ball elements grouped by left coset of W_Ω for each Ω in `j`, keeping
/// cosets with at least `min_size` elements in the ball. Each region lists
/// ball indices in increasing order; regions are sorted.
std::vector<std::vector<std::size_t>> coset_regions(const racg::Graph& g, const racg::CayleyBall& ball,
                                                    const std::vector<racg::VertexSet>& j,
                                                    std::size_t min_size = 2);

extern template class BasicMetricGraph<double>;
extern template class BasicMetricGraph<Rational>;

}  // namespace relhyp::metric
