#include "relhyp/racg.hpp"

#include <algorithm>
#include <set>

namespace relhyp::racg {

IndexBall racg_index_ball(const Graph& g, std::size_t r, std::size_t cap) {
    return racg_index_ball(g, cayley_ball(g, r, cap));
}

IndexBall racg_index_ball(const Graph& g, const CayleyBall& ball) {
    if (g.size() > 20) {
        throw ResourceLimitExceeded("index ball enumerates all subgraphs; at most 20 vertices supported");
    }
    IndexBall out;
    out.peripherals = find_peripheral_collection(g);

    std::vector<VertexSet> lambdas;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.size()); ++bits) {
        const VertexSet s(bits);
        if (!is_complete(g, s)) {
            lambdas.push_back(s);
        }
    }
    std::sort(lambdas.begin(), lambdas.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    // domain_of[l][k]: domain index of (lambdas[l], coset containing ball element k).
    std::vector<std::vector<std::size_t>> domain_of(lambdas.size(), std::vector<std::size_t>(ball.size()));
    std::vector<VertexSet> domain_lambda;
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        const bool unbounded = !is_nontrivial_join(g, lambdas[l]);
        for (const CosetClass& c : coset_partition(g, ball, lambdas[l])) {
            const std::size_t d = out.structure.domains.size();
            out.structure.domains.push_back(
                {g.format(lambdas[l]) + "@" + format_word(g, c.representative), unbounded});
            domain_lambda.push_back(lambdas[l]);
            for (std::size_t k : c.members) {
                domain_of[l][k] = d;
            }
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> nest_lambda, orth_lambda;
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
        for (std::size_t b = 0; b < lambdas.size(); ++b) {
            if (a != b && lambdas[a].subset_of(lambdas[b])) {
                nest_lambda.emplace_back(a, b);
            }
            if (a < b && lambdas[a].subset_of(link(g, lambdas[b]))) {
                orth_lambda.emplace_back(a, b);
            }
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> nest, orth;
    for (std::size_t k = 0; k < ball.size(); ++k) {
        for (const auto& [a, b] : nest_lambda) {
            nest.emplace(domain_of[a][k], domain_of[b][k]);
        }
        for (const auto& [a, b] : orth_lambda) {
            orth.emplace(domain_of[a][k], domain_of[b][k]);
        }
    }
    const auto& domains = out.structure.domains;
    for (const auto& [a, b] : nest) {
        out.structure.nest.emplace_back(domains[a].id, domains[b].id);
    }
    for (const auto& [a, b] : orth) {
        out.structure.orth.emplace_back(domains[a].id, domains[b].id);
    }

    if (out.peripherals.verdict == Verdict::relatively_hyperbolic) {
        const auto& j = out.peripherals.peripherals;
        for (std::size_t d = 0; d < domains.size(); ++d) {
            if (std::find(j.begin(), j.end(), domain_lambda[d]) != j.end()) {
                out.candidate.push_back(domains[d].id);
            }
        }
        std::sort(out.candidate.begin(), out.candidate.end());
    }
    return out;
}

}  // namespace relhyp::racg
