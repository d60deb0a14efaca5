#pragma once

// Command implementations behind the relhyp tool. Each takes the raw input
// text and returns the report; argument parsing and exit codes live in the
// executable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "relhyp/curves.hpp"
#include "relhyp/json_io.hpp"

namespace relhyp::cli {

using json_io::json;

inline constexpr std::string_view tool_version = "0.1.0";

enum class Format { json, csv };

struct Provenance {
    std::string command_line;
    /// FNV-1a 64 of the input bytes, as "fnv1a64:<16 hex digits>".
    std::string input_hash;
    std::string version = std::string(tool_version);
};

std::string fnv1a64(std::string_view bytes);
/// Throws InputError when the file cannot be read.
std::string read_file(const std::string& path);
json to_json(const Provenance& p);

/// Peripheral collection of the RACG on a graph in "v"/"e" line format.
json racg_classify(const std::string& graph_text, const Provenance& p);

/// One row per surface with 2g + n <= bound on which the graph is defined.
std::string curves_survey(curves::WitnessKind kind, int bound, const curves::ClassifyOptions& options, Format format,
                          const Provenance& p);
json curves_classify(curves::WitnessKind kind, curves::SurfaceType s, const curves::ClassifyOptions& options,
                     const Provenance& p);
/// Witnesses on one stable graph, its index structure and isolation check.
json curves_graph(curves::WitnessKind kind, const std::string& graph_json, const Provenance& p);
json curves_enumerate(curves::SurfaceType s, int bound, const Provenance& p);

struct RhDeltaOptions {
    std::size_t radius_min = 0;
    std::size_t radius_max = 4;
    /// Cap on vertices of any space whose delta is computed.
    std::size_t cap_vertices = 2500;
    std::optional<int> depth;
    bool prune = true;
};

/// Writes CSV rows radius by radius. When a cap is hit, writes a warning row
/// after the completed radii and rethrows.
void experiment_rh_delta(const std::string& graph_text, const RhDeltaOptions& options, std::ostream& out,
                         const Provenance& p);

/// Exact four-point delta, or sampled when a seed is given.
json metric_delta(const std::string& graph_json, std::optional<std::uint64_t> seed, std::size_t samples,
                  const Provenance& p);

json hhs_validate(const std::string& structure_json, bool clean_containers, const Provenance& p);
/// Checks `isolating` when given, otherwise searches for a collection.
json hhs_isolate(const std::string& structure_json, const std::optional<std::vector<std::string>>& isolating,
                 const Provenance& p);

}  // namespace relhyp::cli
