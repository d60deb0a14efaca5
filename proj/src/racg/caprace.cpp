#include "relhyp/racg.hpp"

#include <algorithm>

namespace relhyp::racg {

namespace {

std::vector<VertexSet> non_edges_in(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!g.adjacent(m[i], m[j])) {
                out.push_back(VertexSet::single(m[i]) | VertexSet::single(m[j]));
            }
        }
    }
    return out;
}

VertexSet link_closure(const Graph& g, VertexSet s) {
    for (;;) {
        VertexSet grown = s;
        for (VertexSet e : non_edges_in(g, s)) {
            grown = grown | link(g, e);
        }
        if (grown == s) {
            return s;
        }
        s = grown;
    }
}

}  // namespace

CapraceReport check_caprace_conditions(const Graph& g, const std::vector<VertexSet>& j) {
    CapraceReport report;
    std::vector<VertexSet> members = j;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VertexSet omega : members) {
        if (!omega.subset_of(g.all())) {
            throw InputError("peripheral set is not contained in the graph");
        }
    }
    for (VertexSet omega : members) {
        if (omega == g.all()) {
            report.violations.push_back({"not-proper", {omega}});
        }
        if (is_complete(g, omega)) {
            report.violations.push_back({"complete", {omega}});
        }
    }
    for (const Square& sq : induced_squares(g)) {
        const bool covered = std::any_of(members.begin(), members.end(),
                                         [&](VertexSet omega) { return sq.vertices().subset_of(omega); });
        if (!covered) {
            report.violations.push_back({"join-not-covered", {sq.first, sq.second}});
        }
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const VertexSet meet = members[a] & members[b];
            if (!meet.empty() && !is_complete(g, meet)) {
                report.violations.push_back({"bad-intersection", {members[a], members[b]}});
            }
        }
    }
    for (VertexSet omega : members) {
        for (VertexSet e : non_edges_in(g, omega)) {
            if (!link(g, e).subset_of(omega)) {
                report.violations.push_back({"link-not-contained", {omega, e}});
            }
        }
    }
    return report;
}

PeripheralResult find_peripheral_collection(const Graph& g) {
    PeripheralResult result;
    std::vector<VertexSet> sets;
    for (const Square& sq : induced_squares(g)) {
        sets.push_back(sq.vertices());
    }
    if (sets.empty()) {
        result.verdict = Verdict::hyperbolic;
        result.certificate = check_caprace_conditions(g, {});
        return result;
    }
    // Both rules only ever enlarge sets, so the fixpoint is reached in at most
    // |V| growth steps per set and does not depend on processing order.
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet& s : sets) {
            const VertexSet closed = link_closure(g, s);
            if (closed != s) {
                s = closed;
                changed = true;
            }
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        for (std::size_t a = 0; a < sets.size() && !changed; ++a) {
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                const VertexSet meet = sets[a] & sets[b];
                if (!meet.empty() && !is_complete(g, meet)) {
                    sets[a] = sets[a] | sets[b];
                    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(b));
                    changed = true;
                    break;
                }
            }
        }
    }
    result.closures = sets;
    if (std::find(sets.begin(), sets.end(), g.all()) != sets.end()) {
        result.verdict = Verdict::not_relatively_hyperbolic;
        return result;
    }
    result.verdict = Verdict::relatively_hyperbolic;
    result.peripherals = sets;
    result.certificate = check_caprace_conditions(g, sets);
    if (!result.certificate.holds()) {
        throw std::logic_error("closed peripheral collection failed re-verification");
    }
    return result;
}

}  // namespace relhyp::racg
