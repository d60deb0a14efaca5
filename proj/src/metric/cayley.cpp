#include "relhyp/metric.hpp"

#include <map>

namespace relhyp::metric {

MetricGraph cayley_metric_graph(const racg::Graph& g, const racg::CayleyBall& ball) {
    MetricGraph out;
    for (const auto& w : ball.elements) {
        out.add_vertex(racg::format_word(g, w));
    }
    for (const auto& [a, b] : ball.edges) {
        out.add_edge(a, b, 1.0);
    }
    return out;
}

std::vector<std::vector<std::size_t>> coset_regions(const racg::Graph& g, const racg::CayleyBall& ball,
                                                    const std::vector<racg::VertexSet>& j, std::size_t min_size) {
    std::vector<std::vector<std::size_t>> out;
    for (racg::VertexSet omega : j) {
        if (!omega.subset_of(g.all())) {
            throw InputError("subgraph " + std::to_string(omega.bits()) + " has vertices outside the graph");
        }
        std::map<racg::Word, std::vector<std::size_t>> cosets;
        for (std::size_t i = 0; i < ball.size(); ++i) {
            cosets[racg::minimal_coset_representative(g, ball.elements[i], omega)].push_back(i);
        }
        for (auto& [rep, members] : cosets) {
            if (members.size() >= min_size) {
                out.push_back(std::move(members));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace relhyp::metric
