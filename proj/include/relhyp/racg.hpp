#pragma once

// Right-angled Coxeter groups W_Γ: defining-graph combinatorics, the
// peripheral-collection criterion, word normal forms, Cayley balls and the
// star-coset index structure of a ball.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relhyp/errors.hpp"
#include "relhyp/hhs.hpp"
#include "relhyp/verdict.hpp"

namespace relhyp::racg {

inline constexpr std::size_t max_vertices = 64;

/// Subset of the vertices of a defining graph, read as the full subgraph it
/// spans. Bit i stands for vertex i.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first_n(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
    void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }
    /// Members in increasing order.
    std::vector<std::size_t> members() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Finite simplicial graph: no loops, no multi-edges, at most 64 vertices.
class Graph {
public:
    Graph() = default;
    Graph(const std::vector<std::string>& names,
          const std::vector<std::pair<std::string, std::string>>& edges);

    /// Adds a vertex; throws InputError on duplicates or overflow.
    std::size_t add_vertex(const std::string& name);
    /// Adds an edge; idempotent. Throws InputError on loops and unknown names.
    void add_edge(std::size_t a, std::size_t b);
    void add_edge(std::string_view a, std::string_view b);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws InputError on unknown names.
    std::size_t require(std::string_view name) const;

    bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].contains(b); }
    VertexSet neighbors(std::size_t v) const { return adj_[v]; }
    VertexSet all() const { return VertexSet::first_n(size()); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    VertexSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;
    /// "{a,b,c}" in vertex order.
    std::string format(VertexSet s) const;

    /// Same graph with vertices renamed and reordered: vertex i becomes
    /// position perm[i] in the result.
    Graph permuted(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Defining-graph combinatorics.

struct SubgraphInfo {
    bool is_complete = false;
    VertexSet link;
    VertexSet star;
};

/// Link, star and completeness of the full subgraph on `a`. The link of the
/// empty set is the whole vertex set.
SubgraphInfo subgraph_query(const Graph& g, VertexSet a);
VertexSet link(const Graph& g, VertexSet a);
VertexSet star(const Graph& g, VertexSet a);
bool is_complete(const Graph& g, VertexSet a);

/// True when `a` splits as a join A * B with A and B both non-complete.
bool is_nontrivial_join(const Graph& g, VertexSet a);

/// Pair of non-edges {a,b}, {c,d} on four distinct vertices with all four
/// cross edges present, i.e. an induced square read as a join.
struct Square {
    VertexSet first;
    VertexSet second;
    VertexSet vertices() const { return first | second; }
    friend bool operator==(const Square&, const Square&) = default;
};

/// All induced squares, each listed once with first < second.
std::vector<Square> induced_squares(const Graph& g);

// Peripheral collections.

struct CapraceViolation {
    /// One of: not-proper, complete, join-not-covered, bad-intersection,
    /// link-not-contained.
    std::string clause;
    std::vector<VertexSet> witnesses;
};

struct CapraceReport {
    std::vector<CapraceViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// Checks a candidate collection J: members proper and non-complete; (i)
/// every induced square lies in a member; (ii) distinct members meet in the
/// empty set or a clique; (iii) for every non-edge {a,b} inside a member Ω,
/// lk({a,b}) ⊆ Ω. Square-only (i) is equivalent to the full join condition
/// once (iii) holds. Throws InputError if a member has bits outside V(Γ).
CapraceReport check_caprace_conditions(const Graph& g, const std::vector<VertexSet>& j);

struct PeripheralResult {
    Verdict verdict = Verdict::hyperbolic;
    /// Minimal forced collection, sorted; empty unless relatively hyperbolic.
    std::vector<VertexSet> peripherals;
    /// Closed candidate sets after the fixpoint, sorted.
    std::vector<VertexSet> closures;
    /// Re-verification of the conditions on `peripherals`.
    CapraceReport certificate;
};

/// Grows each induced square under link closure and merges sets that meet in
/// a non-clique. Every step is forced by the conditions, so a closure equal to
/// V(Γ) rules out any proper collection. The converse direction (that failure
/// of the conditions means no relative hyperbolicity) rests on Caprace's
/// theorem, which is cited rather than proved here.
PeripheralResult find_peripheral_collection(const Graph& g);

// Words and normal forms. A word is a sequence of vertex indices.

using Word = std::vector<std::uint8_t>;

/// Free reduction under v² = 1 and commutation, followed by the
/// lexicographically least representative of the commutation class (letters
/// compared by vertex index). Idempotent; equal outputs iff equal elements.
Word canonical_word(const Graph& g, const Word& w);
/// Parses letters by vertex name; throws InputError on unknown names.
Word canonical_word(const Graph& g, const std::vector<std::string>& letters);

/// Normal form of g·s for g already in normal form.
Word multiply(const Graph& g, const Word& element, std::uint8_t s);
Word inverse(const Word& w);

/// "1" for the identity, else names joined by '.'.
std::string format_word(const Graph& g, const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// The closed ball of radius r about the identity in the Cayley graph with
/// the vertex generators.
struct CayleyBall {
    std::size_t radius = 0;
    /// BFS order; elements[0] is the identity.
    std::vector<Word> elements;
    std::unordered_map<Word, std::size_t, WordHash> index;
    /// Unit edges {g, gs} with both ends in the ball, as index pairs i < j.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t default_ball_cap = 200000;

/// Throws ResourceLimitExceeded once the ball would exceed `cap` elements.
CayleyBall cayley_ball(const Graph& g, std::size_t r, std::size_t cap = default_ball_cap);

/// Shortest representative of g·W_T: the normal form with every letter of T
/// that can be commuted to the right end removed, repeatedly.
Word minimal_coset_representative(const Graph& g, const Word& element, VertexSet t);

struct CosetClass {
    Word representative;
    std::vector<std::size_t> members;
};

/// Ball elements grouped by coset of W_{st(Λ)}, ordered by (length,
/// representative).
std::vector<CosetClass> coset_partition(const Graph& g, const CayleyBall& ball, VertexSet lambda);

struct IndexBall {
    hhs::IndexStructure structure;
    /// Domains whose subgraph belongs to the peripheral collection J.
    std::vector<std::string> candidate;
    PeripheralResult peripherals;
};

/// Index structure on (Λ, coset of W_{st(Λ)}) for non-complete Λ, with the
/// cosets those meeting `ball`. Nesting and orthogonality use a shared
/// element of the two cosets inside the ball, so relations witnessed only
/// outside it are missed; domains near the centre are exact. Λ is unbounded
/// unless it is a join of two non-complete subgraphs.
IndexBall racg_index_ball(const Graph& g, const CayleyBall& ball);
IndexBall racg_index_ball(const Graph& g, std::size_t r, std::size_t cap = default_ball_cap);

// Text format: "v <name>" and "e <a> <b>" lines, '#' starts a comment.

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace relhyp::racg
