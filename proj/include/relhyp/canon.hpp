#pragma once

#include <cstddef>
#include <vector>

namespace relhyp::canon {

/// Small undirected multigraph with integer vertex colors.
/// `multiplicity[i][j]` is the number of edges between i and j; the diagonal
/// counts loops. The matrix must be symmetric.
struct ColoredMultigraph {
    std::vector<int> color;
    std::vector<std::vector<int>> multiplicity;

    std::size_t size() const { return color.size(); }
};

/// Canonical form of a colored multigraph: two graphs receive equal codes iff
/// they are isomorphic by a color-preserving bijection.
struct CanonicalForm {
    /// order[k] is the original vertex placed at canonical position k.
    std::vector<std::size_t> order;
    std::vector<int> code;
};

/// Individualization-refinement search over equitable partitions. Exhaustive
/// over the search tree (no automorphism pruning), which is fine for the
/// graphs handled here (at most a few dozen vertices, usually under ten).
CanonicalForm canonical_form(const ColoredMultigraph& g);

}  // namespace relhyp::canon
