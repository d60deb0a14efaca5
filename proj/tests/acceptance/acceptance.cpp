// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "relhyp/hhs.hpp"
#include "relhyp/metric.hpp"
#include "relhyp/racg.hpp"

#include "../support/curves_properties.hpp"
#include "../support/hhs_properties.hpp"
#include "../support/metric_properties.hpp"
#include "../support/racg_properties.hpp"

namespace {

namespace hhs = relhyp::hhs;
namespace metric = relhyp::metric;
namespace racg = relhyp::racg;
namespace curves = relhyp::curves;
using relhyp::Verdict;

// Tolerances and budgets.
constexpr double audit_constant_cap = 3.0;
constexpr double trend_tolerance = 0.5;
constexpr int cut_chain_cap = 5;
constexpr int survey_bound = 8;
constexpr int invariant_bound = 8;

struct Result {
    std::vector<std::string> failures;
    std::string summary;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
    void absorb(const props::Outcome& o, const std::string& label) {
        if (o.cases == 0) {
            failures.push_back(label + ": no cases ran");
        }
        for (const auto& f : o.failures) {
            failures.push_back(label + ": " + f);
        }
    }
};

struct Criterion {
    int number;
    std::string name;
    double seconds;
    std::function<Result()> run;
};

std::string fixed(double x, int digits = 3) {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

Result racg_goldens() {
    Result r;
    const auto c5 = racg::find_peripheral_collection(oracle::c5());
    const auto c4 = racg::find_peripheral_collection(oracle::c4());
    const auto w = oracle::c4_whisker();
    const auto cw = racg::find_peripheral_collection(w);
    r.require(c5.verdict == Verdict::hyperbolic, "C5 is not hyperbolic");
    r.require(c4.verdict == Verdict::not_relatively_hyperbolic, "C4 is not reported non-relatively hyperbolic");
    r.require(cw.verdict == Verdict::relatively_hyperbolic && cw.peripherals.size() == 1 &&
                  cw.peripherals[0] == w.set_of({"a", "b", "c", "d"}),
              "C4 with a whisker does not give J = {C4}");
    const auto ex = props::exhaustive_peripheral_agreement(6);
    r.absorb(ex, "exhaustive");
    r.summary = std::to_string(ex.cases) + " graphs on <= 6 vertices agree with exhaustive search";
    return r;
}

Result survey_table() {
    Result r;
    std::string tallies;
    int chain = 0;
    for (const auto kind : {curves::WitnessKind::sep, curves::WitnessKind::pants, curves::WitnessKind::cut}) {
        const auto s = props::survey_against_known(kind, survey_bound, cut_chain_cap);
        r.absorb(s.outcome, std::string(curves::to_string(kind)));
        tallies += std::string(tallies.empty() ? "" : "; ") + std::string(curves::to_string(kind)) + " " +
                   std::to_string(s.rows.size()) + " rows";
        if (kind == curves::WitnessKind::cut) {
            chain = s.longest_cut_chain;
        }
        if (kind == curves::WitnessKind::pants) {
            for (const auto& row : s.rows) {
                if (row.surface.xi() == 4) {
                    r.require(!row.udp.holds, "pants " + curves::to_string(row.surface) + ": UDP holds at xi = 4");
                }
            }
        }
    }
    const auto cut3 = curves::classify(curves::WitnessKind::cut, curves::SurfaceType{3, 0});
    r.require(cut3.verdict == Verdict::not_relatively_hyperbolic && cut3.chains && cut3.chains->found &&
                  cut3.chains->max_length <= cut_chain_cap,
              "Cut(S_{3,0}) lacks chain evidence of length <= 5");
    r.summary = tallies + "; longest Cut chain " + std::to_string(chain);
    return r;
}

Result horoball_audit() {
    Result r;
    const auto a = props::horoball_audit(1000, 10, {10, 100, 1000}, audit_constant_cap);
    r.absorb(a.outcome, "audit");
    r.summary = "L = " + fixed(a.report.constant) + " <= " + fixed(audit_constant_cap, 1) +
                ", pruning gap " + fixed(a.max_pruning_gap, 12);
    return r;
}

Result delta_oracle() {
    Result r;
    const auto eq = props::delta_oracle_equivalence(41, 50, 40);
    const auto trees = props::tree_delta(42, 30, 40);
    const auto scaling = props::delta_scaling(43, 30, 40);
    r.absorb(eq, "oracle");
    r.absorb(trees, "trees");
    r.absorb(scaling, "scaling");
    r.summary = std::to_string(eq.cases) + " oracle, " + std::to_string(trees.cases) + " tree, " +
                std::to_string(scaling.cases) + " scaling cases";
    return r;
}

Result isolation_end_to_end() {
    Result r;
    const auto w = oracle::c4_whisker();
    const auto ib = racg::racg_index_ball(w, 4);
    bool c4_star = !ib.candidate.empty();
    for (const auto& id : ib.candidate) {
        c4_star = c4_star && id.rfind("{a,b,c,d}@", 0) == 0;
    }
    r.require(c4_star, "candidate set is not the C4 star cosets");
    const auto check = hhs::check_isolated_orthogonality(ib.structure, ib.candidate);
    r.require(std::holds_alternative<hhs::IsolationCertificate>(check), "C4 star cosets do not isolate orthogonality");
    if (const auto* cert = std::get_if<hhs::IsolationCertificate>(&check)) {
        r.require(hhs::derive_relative_skeleton(ib.structure, *cert).rank == 1, "relative skeleton rank is not 1");
    }
    r.require(!hhs::find_isolating_collection(racg::racg_index_ball(oracle::c4(), 3).structure),
              "C4 ball has an isolating collection");

    const auto j = racg::find_peripheral_collection(w).peripherals;
    std::vector<double> plain;
    std::vector<double> cusped;
    for (std::size_t radius : {3, 4}) {
        const auto ball = racg::cayley_ball(w, radius);
        const auto base = metric::cayley_metric_graph(w, ball);
        const auto regions = metric::coset_regions(w, ball, j);
        plain.push_back(metric::four_point_delta(base).delta);
        cusped.push_back(metric::four_point_delta(metric::build_cusped(base, regions).graph).delta);
    }
    r.require(cusped[1] - cusped[0] <= trend_tolerance, "cusped delta rises by more than the tolerance");
    r.require(plain[1] - plain[0] >= -trend_tolerance, "plain delta falls by more than the tolerance");
    r.summary = std::to_string(ib.candidate.size()) + " star cosets isolate; delta plain " + fixed(plain[0]) + " -> " +
                fixed(plain[1]) + ", cusped " + fixed(cusped[0]) + " -> " + fixed(cusped[1]) + " (tolerance " +
                fixed(trend_tolerance, 1) + ")";
    return r;
}

Result hhs_properties() {
    Result r;
    const auto mutation = props::mutation_detection(61, 400);
    const auto isolation = props::isolation_equivalence(62, 400);
    const auto rank = props::rank_complexity(63, 200);
    r.absorb(mutation, "mutation");
    r.absorb(isolation, "isolation");
    r.absorb(rank, "rank");
    r.summary = "1000 structures; " + std::to_string(mutation.cases + isolation.cases + rank.cases) + " checks";
    return r;
}

Result curves_invariants() {
    Result r;
    const auto inv = props::enumeration_invariants(71, invariant_bound);
    const auto oracle_match = props::enumeration_matches_oracle(6);
    const auto udp = props::udp_symmetry(invariant_bound);
    const auto cut = props::cut_genus_two_pairs();
    r.absorb(inv, "enumeration");
    r.absorb(oracle_match, "brute force");
    r.absorb(udp, "udp symmetry");
    r.absorb(cut, "Cut(S_{2,0})");
    r.summary = std::to_string(inv.tally.at("stable graphs")) + " stable graphs, " + std::to_string(udp.cases) +
                " pairs symmetric, " + "Cut(S_{2,0}) pair types " + std::to_string(cut.cases) + ", all complementary";
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "RACG golden suite", 5, racg_goldens},
        {2, "classification table reproduction", 60, survey_table},
        {3, "horoball log-distance audit", 10, horoball_audit},
        {4, "delta engine oracle equivalence", 30, delta_oracle},
        {5, "isolated orthogonality end to end", 120, isolation_end_to_end},
        {6, "hhs-core property suite", 30, hhs_properties},
        {7, "curves invariant suite", 30, curves_invariants},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.require(s < c.seconds, "took " + fixed(s, 2) + " s, limit " + fixed(c.seconds, 0) + " s");
        const bool pass = r.failures.empty();
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << " (" << fixed(s, 2) << " s < "
                  << fixed(c.seconds, 0) << " s): " << r.summary << "\n";
        for (const auto& f : r.failures) {
            std::cout << "    " << f << "\n";
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
