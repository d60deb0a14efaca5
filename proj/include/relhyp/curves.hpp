#pragma once

// Surfaces, stable graphs of multicurves and the witness combinatorics of
// the separating curve, pants and cut system graphs. A subsurface is a
// connected set of complementary pieces of some multicurve, i.e. a connected
// vertex subset of a stable graph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relhyp/canon.hpp"
#include "relhyp/errors.hpp"
#include "relhyp/hhs.hpp"
#include "relhyp/verdict.hpp"

namespace relhyp::curves {

/// S_{g,n}: genus g, n punctures or boundary components.
struct SurfaceType {
    int g = 0;
    int n = 0;

    int xi() const { return 3 * g - 3 + n; }

    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

/// "S_{g,n}".
std::string to_string(SurfaceType s);

/// Largest 2g + n accepted by the enumerator.
inline constexpr int max_enumeration_bound = 10;

/// Bit v stands for vertex v.
using VertexMask = std::uint32_t;

inline constexpr std::size_t max_stable_graph_vertices = 20;

/// Complementary piece of a multicurve: genus and number of punctures of S
/// it carries. Its boundary count also includes incident edge endpoints.
struct Piece {
    int genus = 0;
    int legs = 0;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Dual graph of a multicurve: one vertex per complementary piece, one edge
/// per curve (loops and parallel edges allowed). Legs are unlabeled.
class StableGraph {
public:
    StableGraph() = default;
    /// Edges are stored with a <= b, sorted. Throws InputError on negative
    /// labels, out-of-range endpoints or more than max_stable_graph_vertices
    /// vertices. Stability is checked separately by `validate`.
    StableGraph(std::vector<Piece> pieces, std::vector<std::pair<std::size_t, std::size_t>> edges);

    /// The edgeless one-vertex graph standing for S itself.
    static StableGraph trivial(SurfaceType s);

    std::size_t size() const { return pieces_.size(); }
    const Piece& piece(std::size_t v) const { return pieces_[v]; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    VertexMask all() const { return (VertexMask{1} << size()) - 1; }

    /// Edges between a and b; loops when a == b.
    int multiplicity(std::size_t a, std::size_t b) const { return mult_[a][b]; }
    /// Incident edge endpoints, a loop counting twice.
    int valence(std::size_t v) const;
    /// Boundary components of the piece: valence plus legs.
    int boundary(std::size_t v) const { return valence(v) + pieces_[v].legs; }
    /// First Betti number |E| - |V| + 1 (for connected graphs).
    int betti() const;
    int genus() const;
    int legs() const;
    SurfaceType surface() const { return {genus(), legs()}; }
    bool is_trivial() const { return size() == 1 && edges_.empty(); }
    /// True when the vertices in `mask` induce a connected subgraph.
    bool connected(VertexMask mask) const;
    /// Connected components of the subgraph induced on `mask`.
    std::vector<VertexMask> components(VertexMask mask) const;

    friend bool operator==(const StableGraph&, const StableGraph&) = default;

private:
    std::vector<Piece> pieces_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<int>> mult_;
};

/// A piece is stable when 2g - 2 + b > 0: no disks, annuli or spheres.
bool stable_piece(const StableGraph& g, std::size_t v);

/// First violated invariant (connectivity, stability of every piece unless
/// the graph is trivial), or nullopt.
std::optional<std::string> invalid_reason(const StableGraph& g);
/// Throws InputError with `invalid_reason`.
void validate(const StableGraph& g);

/// Canonical form respecting piece labels. `marks`, when non-empty, gives an
/// extra color per vertex that isomorphisms must also preserve.
canon::CanonicalForm canonical_form(const StableGraph& g, const std::vector<int>& marks = {});
/// The same graph with vertices in canonical order.
StableGraph canonical_relabel(const StableGraph& g);
/// Vertex v of the result is vertex perm[v] of g.
StableGraph relabel(const StableGraph& g, const std::vector<std::size_t>& perm);

/// Quotient by a partition into connected blocks: each block becomes one
/// piece carrying its genus (including internal cycles) and legs; edges
/// inside a block disappear. Throws InputError if the blocks do not
/// partition the vertices or one is disconnected.
StableGraph contract(const StableGraph& g, const std::vector<VertexMask>& blocks);

/// Every stable graph of S up to isomorphism, each in canonical labeling,
/// sorted by canonical code; the trivial graph included. Requires ξ(S) >= 0.
/// Throws InputError for negative labels or ξ(S) < 0 and
/// ResourceLimitExceeded when 2g + n exceeds `bound`.
std::vector<StableGraph> enumerate_stable_graphs(SurfaceType s, int bound = max_enumeration_bound);

enum class WitnessKind { sep, pants, cut };

std::string_view to_string(WitnessKind k);
/// Accepts "sep", "pants", "cut".
std::optional<WitnessKind> parse_witness_kind(std::string_view s);

struct ComplementComponent {
    VertexMask vertices = 0;
    int genus = 0;
    int legs = 0;
    /// Curves joining the component to the subsurface.
    int curves = 0;
};

/// Subsurface spanned by a connected vertex subset, glued along the edges
/// it contains.
struct FilledSubsurface {
    int genus = 0;
    int curve_boundary = 0;
    int legs = 0;
    std::vector<ComplementComponent> complement;

    int boundary() const { return curve_boundary + legs; }
    int xi() const { return 3 * genus - 3 + boundary(); }
    bool is_pants() const { return genus == 0 && boundary() == 3; }
};

/// Throws InputError when `a` is empty, has bits outside the graph or is
/// disconnected.
FilledSubsurface filled_subsurface(const StableGraph& g, VertexMask a);

/// Sep: every complementary component has genus 0 and at most one puncture.
/// Pants: complexity at least 1. Cut: contains genus. Pairs of pants and S
/// itself are never witnesses. Throws as filled_subsurface.
bool is_witness(WitnessKind kind, const StableGraph& g, VertexMask a);

/// Witness up to homeomorphism: the witness and each complementary component
/// contracted to one vertex each; `witness` is the witness vertex.
struct WitnessType {
    StableGraph graph;
    VertexMask witness = 0;
    FilledSubsurface filled;
};

std::vector<WitnessType> witness_types(WitnessKind kind, const std::vector<StableGraph>& graphs);

/// Two disjoint witnesses on the coarsest stable graph carrying them: vertex
/// a, vertex b and one vertex per component of the rest.
struct DisjointPair {
    StableGraph graph;
    VertexMask a = 0;
    VertexMask b = 0;
    bool complementary = false;
};

/// B = A^c at the vertex level.
bool complementary(const StableGraph& g, VertexMask a, VertexMask b);

/// The coarse configuration of disjoint connected witnesses (a, b) of g, with
/// a and b ordered so that the canonical code is least.
DisjointPair normalize_pair(const StableGraph& g, VertexMask a, VertexMask b);

/// Every pair of disjoint witnesses of the surface carried by `graphs`, up
/// to homeomorphism of the configuration, sorted by canonical code.
std::vector<DisjointPair> disjoint_witness_pairs(WitnessKind kind, const std::vector<StableGraph>& graphs);
std::vector<DisjointPair> disjoint_witness_pairs(WitnessKind kind, SurfaceType s);

struct UdpResult {
    bool holds = true;
    std::optional<DisjointPair> counterexample;
};

/// Every disjoint pair is complementary. The counterexample is the first
/// non-complementary pair with fewest pieces.
UdpResult unique_disjoint_pairs(const std::vector<DisjointPair>& pairs);
UdpResult unique_disjoint_pairs(WitnessKind kind, SurfaceType s);

/// Witness `witness` relative to the chain's end `target`, on the coarsest
/// stable graph carrying both.
struct ChainStep {
    StableGraph graph;
    VertexMask witness = 0;
    VertexMask target = 0;
};

/// Chains W_0, ..., W_k of witnesses with consecutive ones disjoint, joining
/// every pair U, V of distinct witnesses whose complements are witnesses.
/// A state is the configuration of (W_i, V) up to homeomorphism; a move to
/// (W_{i+1}, V) is allowed when some pants decomposition carries W_i, W_{i+1}
/// and V as unions of pieces, which makes every move realizable. Pairs that
/// no multicurve carries together are not covered, so success is evidence
/// rather than proof.
struct ChainEvidence {
    bool found = false;
    /// Subsurfaces in the longest shortest chain.
    int max_length = 0;
    int length_bound = 0;
    std::size_t decompositions = 0;
    /// Configurations (U, V) that need a chain.
    std::size_t pairs = 0;
    std::size_t states = 0;
    /// Longest chain found, or the unconnected pair on failure.
    std::vector<ChainStep> chain;
};

inline constexpr int default_chain_bound = 8;

ChainEvidence chain_witnesses(WitnessKind kind, const std::vector<StableGraph>& graphs,
                              int length_bound = default_chain_bound);
ChainEvidence chain_witnesses(WitnessKind kind, SurfaceType s, int length_bound = default_chain_bound);

/// Why the graph of multicurves of this kind is not studied on S, or nullopt.
std::optional<std::string> undefined_reason(WitnessKind kind, SurfaceType s);
/// Remark attached to defined but special surfaces (the Sep cases whose
/// graph needs another edge relation).
std::optional<std::string> surface_note(WitnessKind kind, SurfaceType s);

struct CurvesReport {
    WitnessKind kind = WitnessKind::sep;
    SurfaceType surface;
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::string> note;
    std::size_t witness_types = 0;
    std::vector<DisjointPair> pairs;
    UdpResult udp;
    /// Complementary pairs W ⊔ W^c, one peripheral C(W) x C(W^c) each.
    std::vector<DisjointPair> peripherals;
    std::optional<ChainEvidence> chains;
};

/// "C(S_{1,1}) x C(S_{1,1})".
std::string peripheral_name(const DisjointPair& p);

struct ClassifyOptions {
    int chain_length_bound = default_chain_bound;
    int enumeration_bound = max_enumeration_bound;
};

/// Hyperbolic without disjoint witnesses; relatively hyperbolic when every
/// disjoint pair is complementary; otherwise not relatively hyperbolic when
/// chain_witnesses succeeds, else inconclusive. Throws InputError when the
/// graph is undefined on S.
CurvesReport classify(WitnessKind kind, SurfaceType s, const ClassifyOptions& options = {});
CurvesReport classify(WitnessKind kind, const std::vector<StableGraph>& graphs,
                      const ClassifyOptions& options = {});

/// One report per defined (g, n) with 2g + n <= bound, ordered by (2g+n, g).
std::vector<CurvesReport> survey(WitnessKind kind, int bound, const ClassifyOptions& options = {});

/// Domains are families of pairwise disjoint connected witness subsets plus
/// "S"; nesting puts each member inside a member of the larger family;
/// orthogonality is disjointness. Ids read "{0,2}+{3}". Throws
/// ResourceLimitExceeded past `max_domains`.
hhs::IndexStructure stable_graph_index_structure(const StableGraph& g, WitnessKind kind,
                                                 std::size_t max_domains = 4096);
/// Ids of the domains W ⊔ W^c with W and W^c witnesses.
std::vector<std::string> complementary_domain_ids(const StableGraph& g, WitnessKind kind);
/// "{0,2}".
std::string mask_id(VertexMask m);

}  // namespace relhyp::curves
