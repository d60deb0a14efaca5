#include "doctest.h"

#include "relhyp/curves.hpp"
#include "relhyp/json_io.hpp"

#include "../support/curves_properties.hpp"

using namespace relhyp::curves;
using relhyp::Verdict;

namespace {

void report(const props::Outcome& o) {
    for (const auto& f : o.failures) {
        INFO(f);
        CHECK(false);
    }
    CHECK(o.cases > 0);
}

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

StableGraph two_tori() { return StableGraph({{1, 0}, {1, 0}}, {{0, 1}}); }

/// u = (0,4), v = (0,4), w = (0,3) carrying the puncture.
StableGraph sep_counterexample() {
    return StableGraph({{0, 0}, {0, 0}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}});
}

const FilledSubsurface* find_filled(const std::vector<WitnessType>& types, int genus, int boundary) {
    for (const auto& t : types) {
        if (t.filled.genus == genus && t.filled.boundary() == boundary) {
            return &t.filled;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("surface types and stable graph bookkeeping") {
    CHECK(SurfaceType{2, 1}.xi() == 4);
    CHECK(to_string(SurfaceType{3, 0}) == "S_{3,0}");

    const StableGraph g({{0, 1}, {1, 0}}, {{1, 0}, {0, 0}});
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}});
    CHECK(g.valence(0) == 3);
    CHECK(g.boundary(0) == 4);
    CHECK(g.betti() == 1);
    CHECK(g.genus() == 2);
    CHECK(g.surface() == SurfaceType{2, 1});
    CHECK_FALSE(invalid_reason(g).has_value());

    CHECK_THROWS_AS(StableGraph({{0, 0}}, {{0, 1}}), relhyp::InputError);
    CHECK_THROWS_AS(StableGraph({{-1, 0}}, {}), relhyp::InputError);
    // (0,2) piece: an annulus.
    CHECK(invalid_reason(StableGraph({{1, 0}, {0, 1}}, {{0, 1}})).has_value());
    CHECK(invalid_reason(StableGraph({{1, 1}, {1, 1}}, {})) == "stable graph is disconnected");
    CHECK_FALSE(invalid_reason(StableGraph::trivial({1, 0})).has_value());
    CHECK_THROWS_AS(validate(StableGraph({{0, 0}}, {{0, 0}})), relhyp::InputError);

    const StableGraph path({{0, 2}, {0, 1}, {0, 2}}, {{0, 1}, {1, 2}});
    CHECK(path.components(bit(0) | bit(2)).size() == 2);
    CHECK(path.connected(bit(0) | bit(1)));
    CHECK_FALSE(path.connected(bit(0) | bit(2)));
}

TEST_CASE("contraction keeps genus and punctures") {
    const auto g = sep_counterexample();
    const auto c = contract(g, {bit(0) | bit(1), bit(2)});
    CHECK(c.size() == 2);
    CHECK(c.piece(0) == Piece{2, 0});
    CHECK(c.piece(1) == Piece{0, 1});
    CHECK(c.edges().size() == 2);
    CHECK(c.surface() == g.surface());
    CHECK_THROWS_AS(contract(g, {bit(0) | bit(1)}), relhyp::InputError);
    CHECK_THROWS_AS(contract(g, {bit(0), bit(0) | bit(1) | bit(2)}), relhyp::InputError);
}

TEST_CASE("enumeration of small surfaces") {
    const auto s04 = enumerate_stable_graphs({0, 4});
    REQUIRE(s04.size() == 2);
    CHECK(s04[0].is_trivial());
    CHECK(s04[1].size() == 2);
    CHECK(s04[1].piece(0) == Piece{0, 2});
    CHECK(s04[1].piece(1) == Piece{0, 2});

    const auto s11 = enumerate_stable_graphs({1, 1});
    REQUIRE(s11.size() == 2);
    const auto& nodal = s11[0].is_trivial() ? s11[1] : s11[0];
    CHECK(nodal.piece(0) == Piece{0, 1});
    CHECK(nodal.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});

    CHECK(enumerate_stable_graphs({0, 3}).size() == 1);
    CHECK(enumerate_stable_graphs({1, 0}).size() == 1);
    // Strata counts of the compactified moduli spaces of closed curves.
    CHECK(enumerate_stable_graphs({2, 0}).size() == 7);
    CHECK(enumerate_stable_graphs({3, 0}).size() == 42);
    CHECK(enumerate_stable_graphs({4, 0}).size() == 379);

    CHECK_THROWS_AS(enumerate_stable_graphs({0, 2}), relhyp::InputError);
    CHECK_THROWS_AS(enumerate_stable_graphs({-1, 5}), relhyp::InputError);
    CHECK_THROWS_AS(enumerate_stable_graphs({5, 1}), relhyp::ResourceLimitExceeded);
    CHECK_THROWS_AS(enumerate_stable_graphs({3, 1}, 6), relhyp::ResourceLimitExceeded);
}

TEST_CASE("enumeration agrees with brute force and survives relabeling") {
    report(props::enumeration_matches_oracle(6));
    report(props::enumeration_invariants(17, 8));
}

TEST_CASE("filled subsurfaces") {
    const auto f = filled_subsurface(two_tori(), bit(0));
    CHECK(f.genus == 1);
    CHECK(f.curve_boundary == 1);
    CHECK(f.legs == 0);
    REQUIRE(f.complement.size() == 1);
    CHECK(f.complement[0].genus == 1);
    CHECK(f.complement[0].legs == 0);

    // Two four-holed spheres glued along four curves: genus 3.
    const StableGraph four({{0, 0}, {0, 0}}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    CHECK(four.genus() == 3);
    const auto u = filled_subsurface(four, bit(0));
    CHECK(u.genus == 0);
    CHECK(u.curve_boundary == 4);
    CHECK(u.complement.at(0).genus == 0);

    // All but one vertex: the complement is that piece.
    const auto g = sep_counterexample();
    const auto most = filled_subsurface(g, bit(0) | bit(1));
    REQUIRE(most.complement.size() == 1);
    CHECK(most.complement[0].vertices == bit(2));
    CHECK(most.complement[0].genus == 0);
    CHECK(most.complement[0].legs == 1);
    CHECK(most.genus == 2);

    CHECK_THROWS_AS(filled_subsurface(StableGraph({{0, 2}, {0, 1}, {0, 2}}, {{0, 1}, {1, 2}}), bit(0) | bit(2)),
                    relhyp::InputError);
    CHECK_THROWS_AS(filled_subsurface(g, 0), relhyp::InputError);
}

TEST_CASE("witness predicates") {
    CHECK(is_witness(WitnessKind::cut, two_tori(), bit(0)));
    // One-holed torus with a (1,2) complement carrying genus.
    const StableGraph s21({{1, 0}, {1, 1}}, {{0, 1}});
    CHECK_FALSE(is_witness(WitnessKind::sep, s21, bit(0)));
    CHECK(is_witness(WitnessKind::pants, s21, bit(0)));
    // A pair of pants never witnesses, and neither does S.
    const StableGraph s04({{0, 2}, {0, 2}}, {{0, 1}});
    CHECK_FALSE(is_witness(WitnessKind::pants, s04, bit(0)));
    CHECK_FALSE(is_witness(WitnessKind::cut, two_tori(), bit(0) | bit(1)));
    const auto g = sep_counterexample();
    CHECK(is_witness(WitnessKind::sep, g, bit(0)));
    CHECK(is_witness(WitnessKind::sep, g, bit(1)));
    CHECK(is_witness(WitnessKind::sep, g, bit(1) | bit(2)));
    CHECK_FALSE(is_witness(WitnessKind::sep, g, bit(2)));
    CHECK(parse_witness_kind("pants") == WitnessKind::pants);
    CHECK_FALSE(parse_witness_kind("Pants").has_value());
}

TEST_CASE("witness types") {
    const auto cut2 = witness_types(WitnessKind::cut, enumerate_stable_graphs({2, 0}));
    REQUIRE(cut2.size() == 1);
    CHECK(cut2[0].filled.genus == 1);
    CHECK(cut2[0].filled.boundary() == 1);
    const auto pants13 = witness_types(WitnessKind::pants, enumerate_stable_graphs({1, 3}));
    CHECK(find_filled(pants13, 1, 1) != nullptr);
    CHECK(find_filled(pants13, 0, 4) != nullptr);
    CHECK(find_filled(pants13, 0, 3) == nullptr);
    CHECK(witness_types(WitnessKind::sep, enumerate_stable_graphs({0, 6})).empty());
}

TEST_CASE("disjoint witness pairs agree with every pair of vertex subsets") {
    report(props::pairs_match_oracle(6));
    report(props::udp_symmetry(7));
    report(props::cut_genus_two_pairs());
}

TEST_CASE("disjoint pairs and unique disjoint pairs") {
    CHECK(disjoint_witness_pairs(WitnessKind::pants, SurfaceType{1, 2}).empty());

    const auto sep31 = disjoint_witness_pairs(WitnessKind::sep, SurfaceType{3, 1});
    const auto expected = normalize_pair(sep_counterexample(), bit(0), bit(1));
    CHECK_FALSE(expected.complementary);
    bool seen = false;
    for (const auto& p : sep31) {
        seen = seen || (p.graph == expected.graph && p.a == expected.a && p.b == expected.b);
    }
    CHECK(seen);

    CHECK(unique_disjoint_pairs(WitnessKind::sep, SurfaceType{3, 0}).holds);
    for (const SurfaceType s : {SurfaceType{2, 0}, SurfaceType{1, 3}, SurfaceType{0, 6}}) {
        CHECK(unique_disjoint_pairs(WitnessKind::pants, s).holds);
    }
    const auto udp = unique_disjoint_pairs(WitnessKind::sep, SurfaceType{3, 1});
    CHECK_FALSE(udp.holds);
    REQUIRE(udp.counterexample.has_value());
    CHECK(udp.counterexample->graph == expected.graph);
    CHECK(unique_disjoint_pairs(std::vector<DisjointPair>{}).holds);

    // The separating-curve figure: W and W^c four-holed spheres on S_{3,0}.
    const auto sep30 = disjoint_witness_pairs(WitnessKind::sep, SurfaceType{3, 0});
    REQUIRE(sep30.size() == 1);
    CHECK(peripheral_name(sep30[0]) == "C(S_{0,4}) x C(S_{0,4})");
}

TEST_CASE("classification examples") {
    const auto cut2 = classify(WitnessKind::cut, SurfaceType{2, 0});
    CHECK(cut2.verdict == Verdict::relatively_hyperbolic);
    REQUIRE(cut2.peripherals.size() == 1);
    CHECK(peripheral_name(cut2.peripherals[0]) == "C(S_{1,1}) x C(S_{1,1})");

    CHECK(classify(WitnessKind::pants, SurfaceType{1, 2}).verdict == Verdict::hyperbolic);
    CHECK(classify(WitnessKind::cut, SurfaceType{1, 0}).verdict == Verdict::hyperbolic);

    const auto cut3 = classify(WitnessKind::cut, SurfaceType{3, 0});
    CHECK(cut3.verdict == Verdict::not_relatively_hyperbolic);
    REQUIRE(cut3.chains.has_value());
    CHECK(cut3.chains->found);
    CHECK(cut3.chains->max_length <= 5);
    CHECK(cut3.chains->max_length >= 3);

    // The search stays inside configurations carried by one multicurve, and
    // for this surface no chain leaves the rigid four-holed-sphere pairs.
    const auto sep31 = classify(WitnessKind::sep, SurfaceType{3, 1});
    CHECK(sep31.verdict == Verdict::inconclusive);
    CHECK(sep31.udp.counterexample.has_value());

    const auto sep21 = classify(WitnessKind::sep, SurfaceType{2, 1});
    CHECK(sep21.note == "excluded: S != S_{2,1}");
    CHECK(surface_note(WitnessKind::sep, {1, 2}).has_value());
    CHECK_FALSE(surface_note(WitnessKind::sep, {3, 0}).has_value());

    CHECK_THROWS_AS(classify(WitnessKind::cut, SurfaceType{2, 1}), relhyp::InputError);
    CHECK_THROWS_AS(classify(WitnessKind::sep, SurfaceType{1, 1}), relhyp::InputError);
    CHECK_THROWS_AS(classify(WitnessKind::pants, SurfaceType{1, 0}), relhyp::InputError);
}

TEST_CASE("chain evidence") {
    // Every pair on S_{2,0} is complementary, so chains are immediate.
    const auto cut2 = chain_witnesses(WitnessKind::cut, SurfaceType{2, 0});
    CHECK(cut2.found);
    CHECK(cut2.max_length == 2);

    const auto cut3 = chain_witnesses(WitnessKind::cut, SurfaceType{3, 0});
    REQUIRE(cut3.found);
    REQUIRE(static_cast<int>(cut3.chain.size()) == cut3.max_length);
    // Consecutive steps are disjoint realizations relative to the same end.
    CHECK(cut3.chain.back().witness == cut3.chain.back().target);
    CHECK(cut3.chain.front().witness != cut3.chain.front().target);
    CHECK(chain_witnesses(WitnessKind::cut, SurfaceType{3, 0}, 2).found == false);

    // A four-holed sphere whose complement is a four-holed sphere has no
    // disjoint pants-graph witness besides that complement, so the chain
    // hypothesis genuinely fails on S_{3,0}.
    const auto pants3 = chain_witnesses(WitnessKind::pants, SurfaceType{3, 0});
    CHECK_FALSE(pants3.found);
    REQUIRE(pants3.chain.size() == 1);
    const auto& step = pants3.chain[0];
    const auto w = filled_subsurface(step.graph, step.witness);
    CHECK(w.genus == 0);
    CHECK(w.boundary() == 4);
    CHECK(classify(WitnessKind::pants, SurfaceType{3, 0}).verdict == Verdict::inconclusive);
}

TEST_CASE("survey reproduces the stated classification") {
    const auto sep = props::survey_against_known(WitnessKind::sep, 8);
    const auto pants = props::survey_against_known(WitnessKind::pants, 8);
    const auto cut = props::survey_against_known(WitnessKind::cut, 8);
    for (const auto* o : {&sep, &pants, &cut}) {
        report(o->outcome);
    }
    CHECK(cut.longest_cut_chain >= 3);
    CHECK(cut.longest_cut_chain <= 5);

    for (const auto& r : sep.rows) {
        // Consistency: no pairs implies UDP implies never "not relatively
        // hyperbolic" without chain evidence.
        if (r.pairs.empty()) {
            CHECK(r.udp.holds);
        }
        if (r.udp.holds) {
            CHECK(r.verdict != Verdict::not_relatively_hyperbolic);
        }
    }
    CHECK_THROWS_AS(survey(WitnessKind::sep, 11), relhyp::ResourceLimitExceeded);
}

TEST_CASE("index structures on stable graphs") {
    namespace hhs = relhyp::hhs;
    const auto s = stable_graph_index_structure(two_tori(), WitnessKind::cut);
    std::vector<std::string> ids;
    for (const auto& d : s.domains) {
        ids.push_back(d.id);
        CHECK(d.unbounded);
    }
    CHECK(ids == std::vector<std::string>{"S", "{0}", "{0}+{1}", "{1}"});
    CHECK(s.orth == std::vector<std::pair<std::string, std::string>>{{"{0}", "{1}"}});
    CHECK(complementary_domain_ids(two_tori(), WitnessKind::cut) == std::vector<std::string>{"{0}+{1}"});

    for (const auto& g : enumerate_stable_graphs({2, 0})) {
        const auto structure = stable_graph_index_structure(g, WitnessKind::cut);
        CHECK(hhs::validate_structure(structure).valid());
        const auto complementary = complementary_domain_ids(g, WitnessKind::cut);
        const auto result = hhs::check_isolated_orthogonality(structure, complementary);
        CHECK(std::holds_alternative<hhs::IsolationCertificate>(result));
        if (complementary.empty()) {
            CHECK(structure.orth.empty());
        }
    }

    const auto sep = stable_graph_index_structure(sep_counterexample(), WitnessKind::sep);
    CHECK_FALSE(hhs::find_isolating_collection(sep).has_value());

    // No disjoint witnesses: no orthogonality, empty isolating set.
    const StableGraph theta({{0, 0}, {0, 0}}, {{0, 1}, {0, 1}, {0, 1}});
    const auto flat = stable_graph_index_structure(theta, WitnessKind::cut);
    CHECK(flat.orth.empty());
    const auto cert = hhs::find_isolating_collection(flat);
    REQUIRE(cert.has_value());
    CHECK(cert->isolating_set.empty());
}

TEST_CASE("stable graph JSON") {
    namespace json_io = relhyp::json_io;
    const auto g = sep_counterexample();
    const auto j = json_io::to_json(g);
    CHECK(j.dump() ==
          R"({"edges":[[0,1],[0,1],[0,1],[0,2],[1,2]],"vertices":[{"genus":0,"legs":0},{"genus":0,"legs":0},{"genus":0,"legs":1}]})");
    CHECK(json_io::stable_graph_from_json(j) == g);
    CHECK(json_io::stable_graph_from_json(json_io::parse_text(R"({"vertices":[{"genus":2}]})")) ==
          StableGraph::trivial({2, 0}));

    auto path_of = [](const std::string& text) {
        try {
            json_io::stable_graph_from_json(json_io::parse_text(text));
        } catch (const json_io::SchemaError& e) {
            return e.path();
        }
        return std::string("no error");
    };
    CHECK(path_of(R"({"vertices":[{"genus":1}],"edges":[[0,1]]})") == "/edges/0");
    CHECK(path_of(R"({"vertices":[{"genus":-1}]})") == "/vertices/0/genus");
    CHECK(path_of(R"({"vertices":[{"genus":0,"hue":1}]})") == "/vertices/0/hue");
    CHECK(path_of(R"({"vertices":[{"genus":1},{"genus":0,"legs":1}],"edges":[[0,1]]})") == "");
    CHECK(path_of(R"({"pieces":[]})") == "/pieces");

    const auto report = json_io::to_json(classify(WitnessKind::cut, SurfaceType{2, 0}));
    CHECK(report.at("status") == "relatively_hyperbolic");
    CHECK(report.at("peripherals").at(0).at("peripheral") == "C(S_{1,1}) x C(S_{1,1})");
    const auto sep = json_io::to_json(classify(WitnessKind::sep, SurfaceType{3, 1}));
    CHECK(sep.at("udp") == false);
    CHECK(sep.contains("counterexample"));
    CHECK(sep.at("chains").at("found") == false);
}
