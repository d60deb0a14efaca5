#include "relhyp/canon.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace relhyp::canon {

namespace {

using Signature = std::vector<int>;

// Equitable refinement. Colors are renumbered to 0..k-1 in an order that
// depends only on the isomorphism class of (graph, coloring).
void refine(const ColoredMultigraph& g, std::vector<int>& colors) {
    const std::size_t n = g.size();
    std::size_t classes = 0;
    for (;;) {
        std::vector<Signature> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            Signature& s = sig[v];
            s.push_back(colors[v]);
            s.push_back(g.multiplicity[v][v]);
            std::vector<std::pair<int, int>> nbr;
            for (std::size_t u = 0; u < n; ++u) {
                if (u != v && g.multiplicity[v][u] > 0) {
                    nbr.emplace_back(colors[u], g.multiplicity[v][u]);
                }
            }
            std::sort(nbr.begin(), nbr.end());
            for (auto [c, m] : nbr) {
                s.push_back(c);
                s.push_back(m);
            }
        }
        std::vector<Signature> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < n; ++v) {
            colors[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        }
        if (uniq.size() == classes) {
            return;
        }
        classes = uniq.size();
    }
}

struct Search {
    const ColoredMultigraph& g;
    CanonicalForm best;
    bool have_best = false;

    void leaf(const std::vector<int>& colors) {
        const std::size_t n = g.size();
        std::vector<std::size_t> order(n);
        for (std::size_t v = 0; v < n; ++v) {
            order[static_cast<std::size_t>(colors[v])] = v;
        }
        std::vector<int> code;
        code.reserve(1 + n + n * (n + 1) / 2);
        code.push_back(static_cast<int>(n));
        for (std::size_t k = 0; k < n; ++k) {
            code.push_back(g.color[order[k]]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                code.push_back(g.multiplicity[order[i]][order[j]]);
            }
        }
        if (!have_best || code < best.code) {
            best.code = std::move(code);
            best.order = std::move(order);
            have_best = true;
        }
    }

    void run(std::vector<int> colors) {
        refine(g, colors);
        const std::size_t n = g.size();
        std::map<int, std::vector<std::size_t>> cells;
        for (std::size_t v = 0; v < n; ++v) {
            cells[colors[v]].push_back(v);
        }
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [c, members] : cells) {
            if (members.size() > 1 && (target == nullptr || members.size() < target->size())) {
                target = &members;
            }
        }
        if (target == nullptr) {
            leaf(colors);
            return;
        }
        for (std::size_t v : *target) {
            std::vector<int> next(n);
            for (std::size_t u = 0; u < n; ++u) {
                next[u] = 2 * colors[u];
            }
            next[v] -= 1;
            run(std::move(next));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const ColoredMultigraph& g) {
    Search search{g, {}, false};
    if (g.size() == 0) {
        search.best.code = {0};
        return search.best;
    }
    // Start from the user colors, compressed to ranks.
    std::vector<int> sorted = g.color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        colors[v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), g.color[v]) - sorted.begin());
    }
    search.run(std::move(colors));
    return search.best;
}

}  // namespace relhyp::canon
