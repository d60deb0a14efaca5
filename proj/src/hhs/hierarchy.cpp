#include "relhyp/hhs.hpp"

#include <algorithm>

namespace relhyp::hhs {

Hierarchy::Hierarchy(const IndexStructure& raw) {
    const std::size_t n = raw.domains.size();
    ids_.reserve(n);
    unbounded_.reserve(n);
    for (const Domain& d : raw.domains) {
        if (d.id.empty()) {
            throw StructureError("domain with empty id");
        }
        if (!index_.emplace(d.id, ids_.size()).second) {
            throw StructureError("duplicate domain id '" + d.id + "'");
        }
        ids_.push_back(d.id);
        unbounded_.push_back(d.unbounded);
    }

    up_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        up_[i].set(i);
    }
    for (const auto& [child, parent] : raw.nest) {
        const auto c = index_of(child);
        const auto p = index_of(parent);
        if (!c || !p) {
            throw StructureError("nest pair [\"" + child + "\", \"" + parent +
                                 "\"] references an unknown domain");
        }
        up_[*c].set(*p);
    }
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != k && up_[i][k]) {
                up_[i] |= up_[k];
            }
        }
    }
    down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) {
            down_[j].set(i);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = up_[i].find_next(i); j != Bits::npos; j = up_[i].find_next(j)) {
            if (up_[j][i]) {
                antisymmetry_failures_.emplace_back(i, j);
            }
        }
    }

    std::vector<Bits> declared(n, Bits(n));
    for (const auto& [a, b] : raw.orth) {
        const auto x = index_of(a);
        const auto y = index_of(b);
        if (!x || !y) {
            throw StructureError("orth pair [\"" + a + "\", \"" + b +
                                 "\"] references an unknown domain");
        }
        declared[*x].set(*y);
        declared[*y].set(*x);
    }
    // V ⊥ U iff some ancestor of V is declared orthogonal to some ancestor of U.
    orth_.assign(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        Bits reach(n);
        for (std::size_t w = up_[v].find_first(); w != Bits::npos; w = up_[v].find_next(w)) {
            reach |= declared[w];
        }
        for (std::size_t w = reach.find_first(); w != Bits::npos; w = reach.find_next(w)) {
            orth_[v] |= down_[w];
        }
    }
}

std::optional<std::size_t> Hierarchy::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Hierarchy::require(std::string_view id) const {
    if (auto i = index_of(id)) {
        return *i;
    }
    throw StructureError("unknown domain id '" + std::string(id) + "'");
}

std::vector<std::size_t> Hierarchy::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (up_[i].count() == 1) {
            out.push_back(i);
        }
    }
    return out;
}

std::size_t Hierarchy::top() const {
    const auto m = maximal_elements();
    if (m.size() != 1) {
        throw std::logic_error("index structure has no unique maximal domain");
    }
    return m.front();
}

void Hierarchy::require_order() const {
    if (!is_partial_order()) {
        const auto [a, b] = antisymmetry_failures_.front();
        throw std::invalid_argument("nesting is not antisymmetric: '" + ids_[a] + "' and '" +
                                    ids_[b] + "' nest into each other");
    }
    if (maximal_elements().size() != 1) {
        throw std::invalid_argument("index structure has no unique maximal domain");
    }
}

}  // namespace relhyp::hhs
