#include "relhyp/metric.hpp"

#include <random>

namespace relhyp::metric {

namespace {

/// a >= b up to the comparison tolerance.
template <class W>
bool at_least(const W& a, const W& b) {
    return !(a < b) || approx_equal(a, b);
}

/// True when v lies on a geodesic from u to some neighbour of v.
template <class W>
bool extends_past(const BasicMetricGraph<W>& g, const BasicDistanceMatrix<W>& d, std::size_t u, std::size_t v) {
    for (const auto& [w, len] : g.neighbors(v)) {
        if (w != u && at_least<W>(d(u, w), d(u, v) + len)) {
            return true;
        }
    }
    return false;
}

}  // namespace

template <class W>
W quadruple_delta(const BasicDistanceMatrix<W>& d, std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    W s[3] = {d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)};
    std::sort(std::begin(s), std::end(s));
    return (s[2] - s[1]) / 2;
}

template <class W>
BasicDeltaReport<W> four_point_delta(const BasicMetricGraph<W>& g, const BasicDistanceMatrix<W>& d,
                                     const DeltaOptions& options) {
    const std::size_t n = g.size();
    if (d.size() != n) {
        throw InputError("distance matrix does not match the graph");
    }
    BasicDeltaReport<W> report;
    report.mode = options.mode;
    if (options.mode == DeltaMode::sampled) {
        if (!options.seed) {
            throw InputError("sampled delta requires a seed");
        }
        report.seed = options.seed;
        report.samples = options.samples;
        if (n == 0) {
            return report;
        }
        std::mt19937_64 rng(*options.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t k = 0; k < options.samples; ++k) {
            const std::array<std::size_t, 4> q{pick(rng), pick(rng), pick(rng), pick(rng)};
            W value = quadruple_delta(d, q[0], q[1], q[2], q[3]);
            if (report.delta < value) {
                report.delta = std::move(value);
                report.quadruple = q;
            }
        }
        return report;
    }

    struct Pair {
        std::size_t u;
        std::size_t v;
    };
    std::vector<Pair> far;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!extends_past(g, d, u, v) && !extends_past(g, d, v, u)) {
                far.push_back({u, v});
            }
        }
    }
    report.far_apart_pairs = far.size();
    if (far.empty()) {
        return report;
    }
    std::stable_sort(far.begin(), far.end(),
                     [&](const Pair& x, const Pair& y) { return d(y.u, y.v) < d(x.u, x.v); });
    report.quadruple = {far[0].u, far[0].v, far[0].u, far[0].v};

    // partners[u] lists (v, d(u, v)) for far-apart pairs {u, v} with u < v
    // already scanned, i.e. at least as long as the current pair.
    std::vector<std::vector<std::pair<std::size_t, W>>> partners(n);
    std::vector<char> useful(n, 0);
    std::vector<std::size_t> candidates;
    for (const auto& [x, y] : far) {
        const W dxy = d(x, y);
        if (!(report.delta < dxy / 2)) {
            break;
        }
        const W* dx = d.row(x);
        const W* dy = d.row(y);
        // 2δ(x, y, u, v) <= d(x, y) - |d(x, u) - d(y, u)|, so u can only
        // improve on the current value when this bound exceeds it.
        candidates.clear();
        W twice = report.delta * 2;
        for (std::size_t u = 0; u < n; ++u) {
            const bool ok = twice < dxy - (dx[u] < dy[u] ? dy[u] - dx[u] : dx[u] - dy[u]);
            useful[u] = ok;
            if (ok) {
                candidates.push_back(u);
            }
        }
        for (std::size_t u : candidates) {
            const W& xu = dx[u];
            const W& yu = dy[u];
            for (const auto& [v, uv] : partners[u]) {
                if (!useful[v]) {
                    continue;
                }
                // Pairing sums: {x,y}{u,v}, {x,u}{y,v}, {x,v}{y,u}.
                const W s1 = dxy + uv;
                const W s2 = xu + dy[v];
                const W s3 = dx[v] + yu;
                const W& hi = s1 < s2 ? (s2 < s3 ? s3 : s2) : (s1 < s3 ? s3 : s1);
                const W& lo = s1 < s2 ? (s1 < s3 ? s1 : s3) : (s2 < s3 ? s2 : s3);
                const W mid = s1 + s2 + s3 - hi - lo;
                if (twice < hi - mid) {
                    twice = hi - mid;
                    report.delta = twice / 2;
                    report.quadruple = {u, v, x, y};
                }
            }
        }
        partners[x].emplace_back(y, dxy);
    }
    return report;
}

template <class W>
BasicDeltaReport<W> four_point_delta(const BasicMetricGraph<W>& g, const DeltaOptions& options) {
    if (options.mode == DeltaMode::sampled && !options.seed) {
        throw InputError("sampled delta requires a seed");
    }
    return four_point_delta(g, shortest_paths(g), options);
}

template double quadruple_delta(const DistanceMatrix&, std::size_t, std::size_t, std::size_t, std::size_t);
template Rational quadruple_delta(const RationalDistanceMatrix&, std::size_t, std::size_t, std::size_t,
                                  std::size_t);
template DeltaReport four_point_delta(const MetricGraph&, const DistanceMatrix&, const DeltaOptions&);
template RationalDeltaReport four_point_delta(const RationalMetricGraph&, const RationalDistanceMatrix&,
                                              const DeltaOptions&);
template DeltaReport four_point_delta(const MetricGraph&, const DeltaOptions&);
template RationalDeltaReport four_point_delta(const RationalMetricGraph&, const DeltaOptions&);

}  // namespace relhyp::metric
