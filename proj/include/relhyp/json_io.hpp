#pragma once

// JSON encodings of the library's inputs and reports. Parsers throw
// SchemaError with a JSON-pointer style path to the offending value.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "relhyp/curves.hpp"
#include "relhyp/errors.hpp"
#include "relhyp/hhs.hpp"
#include "relhyp/metric.hpp"

namespace relhyp::json_io {

using json = nlohmann::json;

class SchemaError : public InputError {
public:
    SchemaError(const std::string& path, const std::string& what)
        : InputError((path.empty() ? "input" : path) + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Parses text, mapping syntax errors to SchemaError at path "".
json parse_text(const std::string& text);

// hhs

hhs::IndexStructure index_structure_from_json(const json& j);
json to_json(const hhs::IndexStructure& s);
json to_json(const hhs::ValidationReport& r);
json to_json(const hhs::IsolationCertificate& c);
json to_json(const hhs::IsolationViolation& v);
json to_json(const hhs::RelativeStructureSkeleton& s);

// metric. Weights are JSON numbers; rational graphs also accept and emit
// strings "p/q".

metric::MetricGraph metric_graph_from_json(const json& j);
metric::RationalMetricGraph rational_metric_graph_from_json(const json& j);
json to_json(const metric::MetricGraph& g);
json to_json(const metric::RationalMetricGraph& g);
/// Quadruple given by vertex names.
json to_json(const metric::DeltaReport& r, const metric::MetricGraph& g);
json to_json(const metric::RationalDeltaReport& r, const metric::RationalMetricGraph& g);
json to_json(const metric::AuditReport& r, const metric::MetricGraph& base);

// curves. Vertex sets are arrays of vertex indices.

curves::StableGraph stable_graph_from_json(const json& j);
json to_json(const curves::StableGraph& g);
json to_json(const curves::DisjointPair& p);
json to_json(const curves::ChainEvidence& e);
json to_json(const curves::CurvesReport& r);

}  // namespace relhyp::json_io
