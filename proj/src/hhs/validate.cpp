#include "relhyp/hhs.hpp"

#include <algorithm>
#include <numeric>

namespace relhyp::hhs {

namespace {

// Longest strict chain ending at each domain. Requires a partial order.
struct ChainTable {
    std::vector<int> length;
    std::vector<std::size_t> prev;
};

ChainTable chain_table(const Hierarchy& h) {
    const std::size_t n = h.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // In a partial order, strictly smaller elements have strictly smaller down-sets.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h.below(a).count() < h.below(b).count();
    });
    ChainTable t{std::vector<int>(n, 1), std::vector<std::size_t>(n, n)};
    for (std::size_t v : order) {
        const Bits& below = h.below(v);
        for (std::size_t u = below.find_first(); u != Bits::npos; u = below.find_next(u)) {
            if (u != v && t.length[u] + 1 > t.length[v]) {
                t.length[v] = t.length[u] + 1;
                t.prev[v] = u;
            }
        }
    }
    return t;
}

std::vector<std::string> ids_of(const Hierarchy& h, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) {
        out.push_back(h.id(i));
    }
    return out;
}

void require_partial_order(const Hierarchy& h) {
    if (!h.is_partial_order()) {
        const auto [a, b] = h.antisymmetry_failures().front();
        throw std::invalid_argument("nesting is not antisymmetric: '" + h.id(a) + "' and '" +
                                    h.id(b) + "' nest into each other");
    }
}

// Maximum clique by branch and bound (Tomita-style greedy colouring bound).
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Bits> adj) : adj_(std::move(adj)) {}

    std::vector<std::size_t> run(const Bits& candidates) {
        std::vector<std::size_t> current;
        expand(current, candidates);
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& current, Bits p) {
        // Greedy colouring gives an upper bound per vertex.
        std::vector<std::size_t> order;
        std::vector<int> bound;
        {
            Bits uncoloured = p;
            int colour = 0;
            while (uncoloured.any()) {
                ++colour;
                Bits q = uncoloured;
                while (q.any()) {
                    const std::size_t v = q.find_first();
                    q.reset(v);
                    q -= adj_[v];
                    uncoloured.reset(v);
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
        }
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[k]) <= best_.size()) {
                return;
            }
            const std::size_t v = order[k];
            current.push_back(v);
            Bits next = p & adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) {
                    best_ = current;
                }
            } else {
                expand(current, next);
            }
            current.pop_back();
            p.reset(v);
        }
    }

    std::vector<Bits> adj_;
    std::vector<std::size_t> best_;
};

}  // namespace

ValidationReport validate_structure(const IndexStructure& raw, const ValidationOptions& options) {
    return validate_structure(Hierarchy(raw), options);
}

ValidationReport validate_structure(const Hierarchy& h, const ValidationOptions& options) {
    ValidationReport report;
    const std::size_t n = h.size();
    auto add = [&](std::string_view tag, std::vector<std::size_t> idx) {
        report.violations.push_back({std::string(tag), ids_of(h, idx)});
    };

    for (const auto& [a, b] : h.antisymmetry_failures()) {
        add(axiom::antisymmetry, {a, b});
    }
    if (n > 0) {
        const auto maxima = h.maximal_elements();
        if (maxima.size() != 1) {
            add(axiom::unique_maximal, maxima);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (h.orthogonal(i, i)) {
            add(axiom::orth_irreflexive, {i});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Bits& o = h.orthogonal_to(i);
        for (std::size_t j = o.find_next(i); j != Bits::npos; j = o.find_next(j)) {
            if (h.comparable(i, j)) {
                add(axiom::orth_comparability, {i, j});
            }
        }
    }

    // Containers: for W and U ⊑ W with some V ⊑ W orthogonal to U, some proper
    // Q ⊏ W must contain every such V.
    bool clean = true;
    for (std::size_t w = 0; w < n; ++w) {
        const Bits& below_w = h.below(w);
        for (std::size_t u = below_w.find_first(); u != Bits::npos; u = below_w.find_next(u)) {
            const Bits targets = below_w & h.orthogonal_to(u);
            if (targets.none()) {
                continue;
            }
            Bits containers = below_w;
            containers.reset(w);
            for (std::size_t v = targets.find_first(); v != Bits::npos && containers.any();
                 v = targets.find_next(v)) {
                containers &= h.above(v);
            }
            if (containers.none()) {
                add(axiom::containers, {w, u});
                clean = false;
                continue;
            }
            if (options.check_clean_containers && !containers.intersects(h.orthogonal_to(u))) {
                report.clean_container_failures.push_back({"clean-containers", ids_of(h, {w, u})});
                clean = false;
            }
        }
    }
    if (options.check_clean_containers) {
        report.clean_containers = clean ? CleanContainers::holds : CleanContainers::fails;
    }

    if (options.complexity_bound && h.is_partial_order()) {
        const ChainTable t = chain_table(h);
        const auto it = std::max_element(t.length.begin(), t.length.end());
        if (it != t.length.end() && *it > *options.complexity_bound) {
            std::vector<std::size_t> chain;
            for (std::size_t v = static_cast<std::size_t>(it - t.length.begin()); v != n; v = t.prev[v]) {
                chain.push_back(v);
            }
            std::reverse(chain.begin(), chain.end());
            add(axiom::finite_complexity, chain);
        }
    }
    return report;
}

int complexity(const IndexStructure& s) { return complexity(Hierarchy(s)); }

int complexity(const Hierarchy& h) {
    require_partial_order(h);
    const ChainTable t = chain_table(h);
    return t.length.empty() ? 0 : *std::max_element(t.length.begin(), t.length.end());
}

RankResult rank(const IndexStructure& s) { return rank(Hierarchy(s)); }

RankResult rank(const Hierarchy& h) {
    const std::size_t n = h.size();
    Bits unbounded(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (h.unbounded(i) && !h.orthogonal(i, i)) {
            unbounded.set(i);
        }
    }
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t i = unbounded.find_first(); i != Bits::npos; i = unbounded.find_next(i)) {
        adj[i] = h.orthogonal_to(i) & unbounded;
    }
    auto clique = CliqueSearch(std::move(adj)).run(unbounded);
    std::vector<std::string> witness = ids_of(h, clique);
    std::sort(witness.begin(), witness.end());
    return {static_cast<int>(clique.size()), std::move(witness)};
}

}  // namespace relhyp::hhs
