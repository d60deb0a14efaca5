#pragma once

// Index-level model of hierarchy structures: nesting, orthogonality and the
// derived transversality on a finite set of domains, together with the
// isolated-orthogonality test and the rank-1 relative skeleton it produces.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "relhyp/errors.hpp"

namespace relhyp::hhs {

using Bits = boost::dynamic_bitset<>;

struct Domain {
    std::string id;
    bool unbounded = false;

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// Raw relational data. `nest` holds (child, parent) pairs and is closed
/// reflexively and transitively; `orth` holds unordered pairs and is closed
/// under inheritance (V ⊑ W, W ⊥ U implies V ⊥ U). Transversality is never
/// stored; it is whatever is neither comparable nor orthogonal.
struct IndexStructure {
    std::vector<Domain> domains;
    std::vector<std::pair<std::string, std::string>> nest;
    std::vector<std::pair<std::string, std::string>> orth;

    friend bool operator==(const IndexStructure&, const IndexStructure&) = default;
};

/// Malformed input: duplicate or dangling ids. Distinct from axiom violations.
class StructureError : public InputError {
public:
    using InputError::InputError;
};

/// Raised by the exhaustive searches when the configured budget is exhausted.
class SearchBoundExceeded : public ResourceLimitExceeded {
public:
    using ResourceLimitExceeded::ResourceLimitExceeded;
};

/// Closed relations over an IndexStructure, indexed by domain position.
class Hierarchy {
public:
    explicit Hierarchy(const IndexStructure& raw);

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_[i]; }
    bool unbounded(std::size_t i) const { return unbounded_[i]; }
    std::optional<std::size_t> index_of(std::string_view id) const;
    /// Throws StructureError when `id` is unknown.
    std::size_t require(std::string_view id) const;

    /// i ⊑ j in the reflexive-transitive closure.
    bool nested(std::size_t i, std::size_t j) const { return up_[i][j]; }
    bool comparable(std::size_t i, std::size_t j) const { return up_[i][j] || up_[j][i]; }
    bool orthogonal(std::size_t i, std::size_t j) const { return orth_[i][j]; }
    bool transverse(std::size_t i, std::size_t j) const {
        return i != j && !comparable(i, j) && !orthogonal(i, j);
    }

    /// Domains j with i ⊑ j (including i).
    const Bits& above(std::size_t i) const { return up_[i]; }
    /// Domains j with j ⊑ i (including i).
    const Bits& below(std::size_t i) const { return down_[i]; }
    const Bits& orthogonal_to(std::size_t i) const { return orth_[i]; }

    bool is_partial_order() const { return antisymmetry_failures_.empty(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& antisymmetry_failures() const {
        return antisymmetry_failures_;
    }

    /// ⊑-maximal domains: nothing strictly above them.
    std::vector<std::size_t> maximal_elements() const;
    /// The unique maximal domain; throws std::logic_error if there is none.
    std::size_t top() const;

    /// Throws std::invalid_argument unless the closure is a partial order with
    /// a unique maximal element.
    void require_order() const;

private:
    std::vector<std::string> ids_;
    std::vector<bool> unbounded_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<Bits> orth_;
    std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_failures_;
};

namespace axiom {
inline constexpr std::string_view antisymmetry = "antisymmetry";
inline constexpr std::string_view unique_maximal = "unique-maximal";
inline constexpr std::string_view orth_irreflexive = "orth-irreflexive";
inline constexpr std::string_view orth_comparability = "orth-comparability";
inline constexpr std::string_view containers = "containers";
inline constexpr std::string_view finite_complexity = "finite-complexity";
}  // namespace axiom

struct Violation {
    std::string axiom;
    std::vector<std::string> domains;

    friend bool operator==(const Violation&, const Violation&) = default;
};

enum class CleanContainers { not_checked, holds, fails };

struct ValidationOptions {
    bool check_clean_containers = false;
    /// When set, chains longer than this are reported as finite-complexity
    /// violations.
    std::optional<int> complexity_bound;
};

struct ValidationReport {
    std::vector<Violation> violations;
    CleanContainers clean_containers = CleanContainers::not_checked;
    /// (W, U) pairs whose container cannot be chosen orthogonal to U.
    std::vector<Violation> clean_container_failures;

    bool valid() const { return violations.empty(); }
};

/// Checks every index-level axiom. Throws StructureError on dangling or
/// duplicate ids.
///
/// Containers: for each W and U ⊑ W such that some V ⊑ W is orthogonal to U,
/// there must be Q ⊑ W with Q ≠ W containing every such V. Clean mode also
/// asks for Q ⊥ U.
ValidationReport validate_structure(const IndexStructure& raw, const ValidationOptions& options = {});
ValidationReport validate_structure(const Hierarchy& h, const ValidationOptions& options = {});

/// Length of the longest ⊑-chain. Throws std::invalid_argument when the
/// nesting closure is not a partial order.
int complexity(const IndexStructure& s);
int complexity(const Hierarchy& h);

struct RankResult {
    int rank = 0;
    std::vector<std::string> witness;
};

/// Largest pairwise-orthogonal family of unbounded domains (exact clique
/// search on the orthogonality graph).
RankResult rank(const IndexStructure& s);
RankResult rank(const Hierarchy& h);

struct IsolationCertificate {
    std::vector<std::string> isolating_set;
    /// Each orthogonal pair (ordered by id) mapped to the I-element above both.
    std::map<std::pair<std::string, std::string>, std::string> pair_witness;
    /// Each domain nested into an I-element mapped to that element.
    std::map<std::string, std::string> membership;

    friend bool operator==(const IsolationCertificate&, const IsolationCertificate&) = default;
};

struct IsolationViolation {
    enum class Clause { contains_maximal, uncovered_pair, non_unique_container };
    Clause clause;
    std::vector<std::string> witnesses;
};

std::string_view to_string(IsolationViolation::Clause clause);

using IsolationResult = std::variant<IsolationCertificate, IsolationViolation>;

/// Tests whether `isolating` isolates orthogonality. Throws StructureError when
/// an id is unknown.
IsolationResult check_isolated_orthogonality(const IndexStructure& s,
                                             const std::vector<std::string>& isolating);
IsolationResult check_isolated_orthogonality(const Hierarchy& h,
                                             const std::vector<std::size_t>& isolating);

struct SearchLimits {
    /// Nodes explored by the isolating-collection search before giving up.
    /// Large enough to exhaust any pool of 24 candidates.
    std::size_t max_nodes = std::size_t{1} << 26;
};

/// Candidate pool: non-maximal domains above at least one orthogonal pair,
/// sorted by id.
std::vector<std::size_t> isolation_candidates(const Hierarchy& h);

/// Returns the lexicographically least (by sorted ids) isolating collection
/// drawn from the candidate pool, or nullopt when none exists. Throws
/// SearchBoundExceeded if the budget runs out first.
std::optional<IsolationCertificate> find_isolating_collection(const IndexStructure& s,
                                                              const SearchLimits& limits = {});
std::optional<IsolationCertificate> find_isolating_collection(const Hierarchy& h,
                                                              const SearchLimits& limits = {});

struct RelativeStructureSkeleton {
    IndexStructure structure;
    std::string top;
    std::vector<std::string> peripherals;
    int rank = 0;
};

/// Rank-1 skeleton I ∪ {R}: R above everything, I pairwise transverse, no
/// orthogonality. Throws std::invalid_argument if `cert` does not check out.
RelativeStructureSkeleton derive_relative_skeleton(const IndexStructure& s,
                                                   const IsolationCertificate& cert);

/// Index set of a space hyperbolic relative to k peripherals: a maximal "R"
/// and unbounded, pairwise transverse "P1".."Pk".
IndexStructure standard_relhyp_skeleton(int k);

}  // namespace relhyp::hhs
