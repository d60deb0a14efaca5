#include "relhyp/hhs.hpp"

#include <algorithm>

namespace relhyp::hhs {

namespace {

// Unordered orthogonal pairs (i < j), skipping reflexive entries.
std::vector<std::pair<std::size_t, std::size_t>> orth_pairs(const Hierarchy& h) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Bits& o = h.orthogonal_to(i);
        for (std::size_t j = o.find_next(i); j != Bits::npos; j = o.find_next(j)) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

std::pair<std::string, std::string> ordered_ids(const Hierarchy& h, std::size_t a, std::size_t b) {
    if (h.id(b) < h.id(a)) {
        std::swap(a, b);
    }
    return {h.id(a), h.id(b)};
}

std::vector<std::size_t> sorted_by_id(const Hierarchy& h, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return h.id(a) < h.id(b); });
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

class IsolationSearch {
public:
    IsolationSearch(const Hierarchy& h, const SearchLimits& limits)
        : limits_(limits), pool_(isolation_candidates(h)) {
        const auto pairs = orth_pairs(h);
        const std::size_t m = pool_.size();
        cover_.assign(m, Bits(pairs.size()));
        conflict_.assign(m, Bits(m));
        for (std::size_t c = 0; c < m; ++c) {
            const Bits& below = h.below(pool_[c]);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (below[pairs[p].first] && below[pairs[p].second]) {
                    cover_[c].set(p);
                }
            }
            for (std::size_t d = 0; d < m; ++d) {
                if (c != d && below.intersects(h.below(pool_[d]))) {
                    conflict_[c].set(d);
                }
            }
        }
        all_pairs_ = Bits(pairs.size());
        all_pairs_.set();
    }

    std::optional<std::vector<std::size_t>> run() {
        chosen_.clear();
        if (visit(0, Bits(pool_.size()), Bits(all_pairs_.size()))) {
            std::vector<std::size_t> out;
            for (std::size_t c : chosen_) {
                out.push_back(pool_[c]);
            }
            return out;
        }
        return std::nullopt;
    }

private:
    // Preorder over increasing index sequences visits subsets in lexicographic
    // order, so the first hit is the lexicographically least valid set.
    bool visit(std::size_t next, const Bits& blocked, const Bits& covered) {
        if (++nodes_ > limits_.max_nodes) {
            throw SearchBoundExceeded("isolating-collection search exceeded " +
                                      std::to_string(limits_.max_nodes) + " nodes (pool of " +
                                      std::to_string(pool_.size()) + " candidates)");
        }
        const Bits uncovered = all_pairs_ - covered;
        if (uncovered.none()) {
            return true;
        }
        Bits reachable(all_pairs_.size());
        for (std::size_t c = next; c < pool_.size(); ++c) {
            if (!blocked[c]) {
                reachable |= cover_[c];
            }
        }
        if (!uncovered.is_subset_of(reachable)) {
            return false;
        }
        for (std::size_t c = next; c < pool_.size(); ++c) {
            if (blocked[c]) {
                continue;
            }
            chosen_.push_back(c);
            Bits b = blocked | conflict_[c];
            b.set(c);
            if (visit(c + 1, b, covered | cover_[c])) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    const SearchLimits& limits_;
    std::vector<std::size_t> pool_;
    std::vector<Bits> cover_;
    std::vector<Bits> conflict_;
    Bits all_pairs_;
    std::vector<std::size_t> chosen_;
    std::size_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(IsolationViolation::Clause clause) {
    switch (clause) {
        case IsolationViolation::Clause::contains_maximal:
            return "contains-maximal";
        case IsolationViolation::Clause::uncovered_pair:
            return "uncovered-pair";
        case IsolationViolation::Clause::non_unique_container:
            return "non-unique-container";
    }
    return "unknown";
}

IsolationResult check_isolated_orthogonality(const IndexStructure& s,
                                             const std::vector<std::string>& isolating) {
    const Hierarchy h(s);
    std::vector<std::size_t> idx;
    idx.reserve(isolating.size());
    for (const auto& id : isolating) {
        idx.push_back(h.require(id));
    }
    return check_isolated_orthogonality(h, idx);
}

IsolationResult check_isolated_orthogonality(const Hierarchy& h,
                                             const std::vector<std::size_t>& isolating) {
    using Clause = IsolationViolation::Clause;
    const std::vector<std::size_t> members = sorted_by_id(h, isolating);
    const std::size_t n = h.size();

    for (std::size_t u : members) {
        if (h.above(u).count() == 1) {
            return IsolationViolation{Clause::contains_maximal, {h.id(u)}};
        }
    }

    Bits in_i(n);
    for (std::size_t u : members) {
        in_i.set(u);
    }

    IsolationCertificate cert;
    for (std::size_t u : members) {
        cert.isolating_set.push_back(h.id(u));
    }

    auto pairs = orth_pairs(h);
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return ordered_ids(h, a.first, a.second) < ordered_ids(h, b.first, b.second);
    });
    for (const auto& [v, w] : pairs) {
        const Bits common = h.above(v) & h.above(w) & in_i;
        if (common.none()) {
            const auto [a, b] = ordered_ids(h, v, w);
            return IsolationViolation{Clause::uncovered_pair, {a, b}};
        }
        // Ties are resolved below by the uniqueness clause; pick the least id.
        std::size_t best = common.find_first();
        for (std::size_t u = common.find_next(best); u != Bits::npos; u = common.find_next(u)) {
            if (h.id(u) < h.id(best)) {
                best = u;
            }
        }
        cert.pair_witness.emplace(ordered_ids(h, v, w), h.id(best));
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    order = sorted_by_id(h, order);
    for (std::size_t v : order) {
        const Bits containers = h.above(v) & in_i;
        const std::size_t count = containers.count();
        if (count > 1) {
            std::vector<std::string> witnesses{h.id(v)};
            for (std::size_t u : members) {
                if (containers[u]) {
                    witnesses.push_back(h.id(u));
                }
            }
            return IsolationViolation{Clause::non_unique_container, std::move(witnesses)};
        }
        if (count == 1) {
            cert.membership.emplace(h.id(v), h.id(containers.find_first()));
        }
    }
    return cert;
}

std::vector<std::size_t> isolation_candidates(const Hierarchy& h) {
    const std::size_t n = h.size();
    Bits pool(n);
    for (const auto& [v, w] : orth_pairs(h)) {
        pool |= h.above(v) & h.above(w);
    }
    std::vector<std::size_t> out;
    for (std::size_t u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
        if (h.above(u).count() > 1) {
            out.push_back(u);
        }
    }
    return sorted_by_id(h, out);
}

std::optional<IsolationCertificate> find_isolating_collection(const IndexStructure& s,
                                                              const SearchLimits& limits) {
    return find_isolating_collection(Hierarchy(s), limits);
}

std::optional<IsolationCertificate> find_isolating_collection(const Hierarchy& h,
                                                              const SearchLimits& limits) {
    auto chosen = IsolationSearch(h, limits).run();
    if (!chosen) {
        return std::nullopt;
    }
    auto result = check_isolated_orthogonality(h, *chosen);
    if (auto* cert = std::get_if<IsolationCertificate>(&result)) {
        return std::move(*cert);
    }
    // The search only emits conflict-free covers, which always check out.
    throw std::logic_error("isolating-collection search produced an invalid set");
}

RelativeStructureSkeleton derive_relative_skeleton(const IndexStructure& s,
                                                   const IsolationCertificate& cert) {
    const Hierarchy h(s);
    h.require_order();
    const auto result = check_isolated_orthogonality(s, cert.isolating_set);
    if (const auto* bad = std::get_if<IsolationViolation>(&result)) {
        std::string msg = "invalid isolation certificate: " + std::string(to_string(bad->clause));
        for (const auto& w : bad->witnesses) {
            msg += " " + w;
        }
        throw std::invalid_argument(msg);
    }
    const auto& checked = std::get<IsolationCertificate>(result);
    if (checked.isolating_set != [&] {
            auto ids = cert.isolating_set;
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            return ids;
        }()) {
        throw std::invalid_argument("invalid isolation certificate: isolating set mismatch");
    }

    RelativeStructureSkeleton out;
    std::string top = "R";
    while (h.index_of(top) && std::find(checked.isolating_set.begin(), checked.isolating_set.end(),
                                        top) != checked.isolating_set.end()) {
        top += "'";
    }
    bool any_unbounded = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
        any_unbounded = any_unbounded || h.unbounded(i);
    }
    out.top = top;
    out.structure.domains.push_back({top, any_unbounded});
    for (const auto& id : checked.isolating_set) {
        out.structure.domains.push_back({id, h.unbounded(h.require(id))});
        out.structure.nest.emplace_back(id, top);
        out.peripherals.push_back(id);
    }
    out.rank = rank(out.structure).rank;
    return out;
}

IndexStructure standard_relhyp_skeleton(int k) {
    if (k < 0) {
        throw std::invalid_argument("peripheral count must be non-negative");
    }
    IndexStructure s;
    s.domains.push_back({"R", true});
    for (int i = 1; i <= k; ++i) {
        const std::string id = "P" + std::to_string(i);
        s.domains.push_back({id, true});
        s.nest.emplace_back(id, "R");
    }
    return s;
}

}  // namespace relhyp::hhs
