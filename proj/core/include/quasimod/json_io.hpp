#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasimod/completeness.hpp"
#include "quasimod/distance_matrix.hpp"
#include "quasimod/envelopes.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/graph.hpp"
#include "quasimod/orlicz.hpp"
#include "quasimod/report.hpp"
#include "quasimod/topology.hpp"

namespace quasimod::io {

using nlohmann::json;

/// Malformed document content. The message names the offending key.
class FormatError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Number or the string "inf".
ExtValue read_ext(const json& j, const std::string& where);
json write_ext(ExtValue v);
json write_real(double v);

PointSet read_points(const json& j, const std::string& key = "points");

/// {"x|y": value}; missing diagonal entries are 0, missing off-diagonal
/// entries are an error.
DistanceMatrix read_distance_table(const json& j, const PointSet& points);

struct GaugeDocument {
  Gauge gauge;
  /// Grid stored with the document, if any.
  std::optional<ScaleGrid> grid;
};

/// Tabulated: {"regime", "conorm", "points", "grid", "table": {"x|y": [..]}}.
/// Closed forms select a builder with "kind": "min_cap" and "ratio" read
/// {"points", "rho": {"x|y": v}}; "scaled_metric" reads {"points", "d",
/// "grid", "g": [..]}; "graph" reads a graph document.
GaugeDocument read_gauge(const json& j);

DirectedGraph read_graph(const json& j);
/// {"times": [..], "costs": {"time|edge": v}} where edge is an index or "from->to".
CostSchedule read_schedule(const json& j, const DirectedGraph& g);
/// {"kind": "power", "p"} or {"kind": "double_phase", "p", "q", "a": [..] | {"from->to": a}}.
EdgeOrliczFamily read_edge_family(const json& j, const DirectedGraph& g);

DiscreteMeasureSpace read_space(const json& j);
/// {"kind": "variable_exponent", "p": {id: p}} | {"kind": "double_phase",
/// "p", "q", "a": {id: a}} | {"kind": "weighted", "inner": {..}, "w": {id: w}}.
MusielakOrlicz read_orlicz(const json& j, const PointSet& points);
/// {id: value} covering every point.
std::vector<double> read_function(const json& j, const PointSet& points);

SequenceFamily read_family(const json& j);
/// {"sequence": [ids]} resolved against a point set.
std::vector<std::size_t> read_sequence(const json& j, const PointSet& points);

struct EnvelopeDocument {
  DistanceMatrix d;
  PartialFunction f;
};
/// {"points", "d": {"x|y": v}, "phi": {id: v}, "L": 1}.
EnvelopeDocument read_envelope(const json& j);

json write(const AxiomReport& r);
json write(const DistanceMatrix& d);
json write(const FiniteTopology& t);
json write(const JoinReport& r);
json write(const CoverResult& c, const PointSet& points);

/// CSV with a header row of point ids and one row per source point.
std::string to_csv(const DistanceMatrix& d);

}  // namespace quasimod::io
