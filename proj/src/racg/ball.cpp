#include "relhyp/racg.hpp"

#include <algorithm>
#include <map>

namespace relhyp::racg {

CayleyBall cayley_ball(const Graph& g, std::size_t r, std::size_t cap) {
    CayleyBall ball;
    ball.radius = r;
    ball.elements.push_back({});
    ball.index.emplace(Word{}, 0);
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= r; ++len) {
        const std::size_t level_end = ball.elements.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t s = 0; s < g.size(); ++s) {
                Word next = multiply(g, ball.elements[i], static_cast<std::uint8_t>(s));
                if (next.size() != len || ball.index.count(next)) {
                    continue;
                }
                if (ball.elements.size() == cap) {
                    throw ResourceLimitExceeded("Cayley ball of radius " + std::to_string(r) +
                                                " exceeds the cap of " + std::to_string(cap) +
                                                " elements");
                }
                ball.index.emplace(next, ball.elements.size());
                ball.elements.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
        for (std::size_t s = 0; s < g.size(); ++s) {
            const auto it = ball.index.find(multiply(g, ball.elements[i], static_cast<std::uint8_t>(s)));
            if (it != ball.index.end() && i < it->second) {
                ball.edges.emplace_back(i, it->second);
            }
        }
    }
    return ball;
}

Word minimal_coset_representative(const Graph& g, const Word& element, VertexSet t) {
    Word w = element;
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t p = w.size(); p-- > 0;) {
            if (!t.contains(w[p])) {
                continue;
            }
            bool descent = true;
            for (std::size_t q = p + 1; q < w.size() && descent; ++q) {
                descent = g.adjacent(w[q], w[p]);
            }
            if (descent) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
                again = true;
                break;
            }
        }
    }
    return canonical_word(g, w);
}

std::vector<CosetClass> coset_partition(const Graph& g, const CayleyBall& ball, VertexSet lambda) {
    const VertexSet t = star(g, lambda);
    std::map<std::pair<std::size_t, Word>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < ball.size(); ++i) {
        Word rep = minimal_coset_representative(g, ball.elements[i], t);
        const std::size_t len = rep.size();
        classes[{len, std::move(rep)}].push_back(i);
    }
    std::vector<CosetClass> out;
    out.reserve(classes.size());
    for (auto& [key, members] : classes) {
        out.push_back({key.second, std::move(members)});
    }
    return out;
}

}  // namespace relhyp::racg
