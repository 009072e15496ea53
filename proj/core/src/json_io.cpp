#include "quasimod/json_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "quasimod/builders.hpp"

namespace quasimod::io {
namespace {

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing key '" + key + "'");
  return *it;
}

double read_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw FormatError(where + ": expected a number");
  return j.get<double>();
}

double read_real(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  return read_number(j, where);
}

std::vector<double> read_numbers(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

/// Per-point values from {id: v} or a list in point order.
std::vector<double> read_per_point(const json& j, const PointSet& points, const std::string& where) {
  if (j.is_array()) {
    auto v = read_numbers(j, where);
    if (v.size() != points.size()) throw FormatError(where + ": expected one value per point");
    return v;
  }
  if (!j.is_object()) throw FormatError(where + ": expected an object keyed by point id");
  std::vector<double> out(points.size());
  std::vector<bool> seen(points.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!points.contains(it.key())) throw FormatError(where + ": unknown point '" + it.key() + "'");
    const std::size_t i = points.index_of(it.key());
    out[i] = read_number(it.value(), where + "." + it.key());
    seen[i] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!seen[i]) throw FormatError(where + ": missing value for '" + points.id(i) + "'");
  return out;
}

std::pair<std::size_t, std::size_t> split_pair(const std::string& key, const PointSet& points,
                                               const std::string& where) {
  const auto bar = key.find('|');
  if (bar == std::string::npos) throw FormatError(where + ": key '" + key + "' is not of the form x|y");
  const std::string x = key.substr(0, bar), y = key.substr(bar + 1);
  for (const auto& id : {x, y})
    if (!points.contains(id)) throw FormatError(where + ": unknown point '" + id + "' in key '" + key + "'");
  return {points.index_of(x), points.index_of(y)};
}

std::size_t edge_index(const std::string& spec, const DirectedGraph& g, const std::string& where) {
  const auto arrow = spec.find("->");
  if (arrow == std::string::npos) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(spec, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != spec.size() || pos == 0 || idx >= g.edges().size())
      throw FormatError(where + ": '" + spec + "' is neither an edge index nor from->to");
    return idx;
  }
  const std::string from = spec.substr(0, arrow), to = spec.substr(arrow + 2);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (g.vertices().id(e.from) == from && g.vertices().id(e.to) == to) return i;
  }
  throw FormatError(where + ": no edge " + spec);
}

std::optional<TConorm> read_regime(const json& j, const std::string& where) {
  const std::string regime = j.value("regime", std::string("additive"));
  if (regime == "additive") return std::nullopt;
  if (regime != "conorm") throw FormatError(where + ": regime must be 'additive' or 'conorm'");
  try {
    return TConorm::parse(j.value("conorm", std::string("max")));
  } catch (const InvalidArgument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

ScaleGrid read_grid(const json& j, const std::string& where) {
  try {
    return ScaleGrid(read_numbers(j, where));
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

ExtValue read_ext(const json& j, const std::string& where) {
  const double v = read_real(j, where);
  if (std::isnan(v) || v < 0) throw FormatError(where + ": value must be >= 0 or \"inf\"");
  return ExtValue(v);
}

json write_ext(ExtValue v) { return v.is_infinite() ? json("inf") : json(v.value()); }

json write_real(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

PointSet read_points(const json& j, const std::string& key) {
  const json& arr = need(j, key, "document");
  if (!arr.is_array() || arr.empty()) throw FormatError("'" + key + "' must be a nonempty array of ids");
  std::vector<std::string> ids;
  for (const auto& id : arr) {
    if (!id.is_string()) throw FormatError("'" + key + "' entries must be strings");
    ids.push_back(id.get<std::string>());
  }
  try {
    return PointSet(std::move(ids));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("'") + key + "': " + e.what());
  }
}

DistanceMatrix read_distance_table(const json& j, const PointSet& points) {
  if (!j.is_object()) throw FormatError("distance table must be an object keyed by x|y");
  const std::size_t n = points.size();
  DistanceMatrix d(points);
  std::vector<bool> seen(n * n, false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto [x, y] = split_pair(it.key(), points, "distance table");
    d(x, y) = read_ext(it.value(), "distance table." + it.key());
    seen[x * n + y] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !seen[x * n + y])
        throw FormatError("distance table: missing entry '" + points.id(x) + "|" + points.id(y) + "'");
  return d;
}

GaugeDocument read_gauge(const json& j) {
  if (!j.is_object()) throw FormatError("gauge document must be an object");
  const std::string kind = j.value("kind", std::string("tabulated"));
  std::optional<ScaleGrid> grid;
  if (j.contains("grid")) grid = read_grid(j["grid"], "grid");

  if (kind == "graph") {
    GaugeDocument doc{graph_gauge(read_graph(j)), grid};
    return doc;
  }
  const PointSet points = read_points(j);
  if (kind == "min_cap") return {make_min_cap(read_distance_table(need(j, "rho", "gauge"), points)), grid};
  if (kind == "ratio") {
    const auto c = read_regime(json{{"regime", "conorm"}, {"conorm", j.value("conorm", std::string("max"))}}, "gauge");
    return {make_ratio(read_distance_table(need(j, "rho", "gauge"), points), *c), grid};
  }
  if (kind == "scaled_metric") {
    if (!grid) throw FormatError("gauge: scaled_metric needs a grid");
    const auto g = read_numbers(need(j, "g", "gauge"), "g");
    if (g.size() != grid->size()) throw FormatError("gauge: 'g' needs one value per grid scale");
    std::vector<ExtValue> gv;
    for (double v : g) gv.push_back(ExtValue(v));
    return {make_scaled_metric(read_distance_table(need(j, "d", "gauge"), points), Profile(*grid, gv)), grid};
  }
  if (kind != "tabulated") throw FormatError("gauge: unknown kind '" + kind + "'");

  const auto conorm = read_regime(j, "gauge");
  if (!grid) throw FormatError("gauge: missing key 'grid'");
  const json& table = need(j, "table", "gauge");
  if (!table.is_object()) throw FormatError("gauge: 'table' must be an object keyed by x|y");
  const std::size_t n = points.size(), m = grid->size();
  std::vector<ExtValue> values(n * n * m);
  std::vector<bool> seen(n * n, false);
  for (auto it = table.begin(); it != table.end(); ++it) {
    auto [x, y] = split_pair(it.key(), points, "table");
    const std::string where = "table." + it.key();
    if (!it.value().is_array() || it.value().size() != m)
      throw FormatError(where + ": expected one value per grid scale");
    for (std::size_t k = 0; k < m; ++k)
      values[(x * n + y) * m + k] = read_ext(it.value()[k], where + "[" + std::to_string(k) + "]");
    seen[x * n + y] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !seen[x * n + y])
        throw FormatError("table: missing entry '" + points.id(x) + "|" + points.id(y) + "'");
  try {
    return {Gauge::tabulated(points, *grid, conorm, std::move(values)), grid};
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("table: ") + e.what());
  }
}

DirectedGraph read_graph(const json& j) {
  const PointSet vertices = read_points(j, "vertices");
  std::vector<Edge> edges;
  const json& arr = need(j, "edges", "graph");
  if (!arr.is_array()) throw FormatError("graph: 'edges' must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = arr[i];
    const json& from = need(e, "from", where);
    const json& to = need(e, "to", where);
    if (!from.is_string() || !to.is_string()) throw FormatError(where + ": endpoints must be vertex ids");
    for (const auto& id : {from.get<std::string>(), to.get<std::string>()})
      if (!vertices.contains(id)) throw FormatError(where + ": unknown vertex '" + id + "'");
    Edge edge;
    edge.from = vertices.index_of(from.get<std::string>());
    edge.to = vertices.index_of(to.get<std::string>());
    if (e.contains("mu")) edge.mu = read_number(e["mu"], where + ".mu");
    if (e.contains("cost")) edge.cost = read_number(e["cost"], where + ".cost");
    edges.push_back(edge);
  }
  std::vector<double> measure;
  if (j.contains("measure")) measure = read_per_point(j["measure"], vertices, "measure");
  try {
    return DirectedGraph(vertices, std::move(edges), std::move(measure));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("graph: ") + e.what());
  }
}

CostSchedule read_schedule(const json& j, const DirectedGraph& g) {
  CostSchedule s;
  s.times = read_numbers(need(j, "times", "schedule"), "times");
  const json& costs = need(j, "costs", "schedule");
  if (!costs.is_object()) throw FormatError("schedule: 'costs' must be an object keyed by time|edge");
  s.costs.assign(s.times.size(), std::vector<double>(g.edges().size(), std::numeric_limits<double>::quiet_NaN()));
  for (auto it = costs.begin(); it != costs.end(); ++it) {
    const std::string where = "costs." + it.key();
    const auto bar = it.key().find('|');
    if (bar == std::string::npos) throw FormatError(where + ": key is not of the form time|edge");
    double t = 0;
    try {
      t = std::stod(it.key().substr(0, bar));
    } catch (const std::exception&) {
      throw FormatError(where + ": time is not a number");
    }
    std::size_t k = 0;
    while (k < s.times.size() && s.times[k] != t) ++k;
    if (k == s.times.size()) throw FormatError(where + ": time is not listed in 'times'");
    s.costs[k][edge_index(it.key().substr(bar + 1), g, where)] = read_number(it.value(), where);
  }
  for (std::size_t k = 0; k < s.times.size(); ++k)
    for (std::size_t e = 0; e < g.edges().size(); ++e)
      if (std::isnan(s.costs[k][e]))
        throw FormatError("schedule: no cost for edge " + std::to_string(e) + " at time " + std::to_string(s.times[k]));
  try {
    s.validate(g.edges().size());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("schedule: ") + e.what());
  }
  return s;
}

EdgeOrliczFamily read_edge_family(const json& j, const DirectedGraph& g) {
  const std::string kind = need(j, "kind", "phi").get<std::string>();
  try {
    if (kind == "power") return EdgeOrliczFamily::power(read_number(need(j, "p", "phi"), "phi.p"));
    if (kind == "double_phase") {
      const json& a = need(j, "a", "phi");
      std::vector<double> weights(g.edges().size(), 0.0);
      if (a.is_array()) {
        weights = read_numbers(a, "phi.a");
        if (weights.size() != g.edges().size()) throw FormatError("phi.a: expected one weight per edge");
      } else if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it)
          weights[edge_index(it.key(), g, "phi.a")] = read_number(it.value(), "phi.a." + it.key());
      } else {
        throw FormatError("phi.a: expected an array or an object keyed by edge");
      }
      return EdgeOrliczFamily::double_phase(read_number(need(j, "p", "phi"), "phi.p"),
                                            read_number(need(j, "q", "phi"), "phi.q"), std::move(weights));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("phi: ") + e.what());
  }
  throw FormatError("phi: unknown kind '" + kind + "'");
}

DiscreteMeasureSpace read_space(const json& j) {
  const PointSet points = read_points(j);
  try {
    return DiscreteMeasureSpace(points, read_per_point(need(j, "mu", "space"), points, "mu"));
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("space: ") + e.what());
  }
}

MusielakOrlicz read_orlicz(const json& j, const PointSet& points) {
  const json& kind_j = need(j, "kind", "orlicz");
  if (!kind_j.is_string()) throw FormatError("orlicz: 'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  try {
    if (kind == "variable_exponent") {
      const json& p = need(j, "p", "orlicz");
      if (p.is_number()) return MusielakOrlicz::variable_exponent(std::vector<double>(points.size(), p.get<double>()));
      return MusielakOrlicz::variable_exponent(read_per_point(p, points, "orlicz.p"));
    }
    if (kind == "double_phase")
      return MusielakOrlicz::double_phase(read_number(need(j, "p", "orlicz"), "orlicz.p"),
                                          read_number(need(j, "q", "orlicz"), "orlicz.q"),
                                          read_per_point(need(j, "a", "orlicz"), points, "orlicz.a"));
    if (kind == "weighted")
      return MusielakOrlicz::weighted(read_orlicz(need(j, "inner", "orlicz"), points),
                                      read_per_point(need(j, "w", "orlicz"), points, "orlicz.w"));
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("orlicz: ") + e.what());
  }
  throw FormatError("orlicz: unknown kind '" + kind + "'");
}

std::vector<double> read_function(const json& j, const PointSet& points) { return read_per_point(j, points, "function"); }

SequenceFamily read_family(const json& j) {
  SequenceFamily fam;
  if (j.contains("p")) fam.p = read_number(j["p"], "p");
  const json& members = need(j, "members", "family");
  if (!members.is_array()) throw FormatError("family: 'members' must be an array");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string where = "members[" + std::to_string(i) + "]";
    if (!members[i].is_array()) throw FormatError(where + ": expected an array");
    std::vector<double> m;
    for (std::size_t k = 0; k < members[i].size(); ++k)
      m.push_back(read_real(members[i][k], where + "[" + std::to_string(k) + "]"));
    fam.members.push_back(std::move(m));
  }
  return fam;
}

std::vector<std::size_t> read_sequence(const json& j, const PointSet& points) {
  const json& seq = need(j, "sequence", "sequence document");
  if (!seq.is_array() || seq.empty()) throw FormatError("'sequence' must be a nonempty array of point ids");
  std::vector<std::size_t> out;
  for (const auto& id : seq) {
    if (!id.is_string() || !points.contains(id.get<std::string>()))
      throw FormatError("sequence: unknown point " + id.dump());
    out.push_back(points.index_of(id.get<std::string>()));
  }
  return out;
}

EnvelopeDocument read_envelope(const json& j) {
  const PointSet points = read_points(j);
  EnvelopeDocument doc{read_distance_table(need(j, "d", "envelope"), points), {}};
  const json& phi = need(j, "phi", "envelope");
  if (!phi.is_object() || phi.empty()) throw FormatError("envelope: 'phi' must be a nonempty object keyed by point id");
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = phi.find(points.id(i));
    if (it == phi.end()) continue;
    doc.f.domain.push_back(i);
    doc.f.values.push_back(read_number(*it, "phi." + points.id(i)));
  }
  for (auto it = phi.begin(); it != phi.end(); ++it)
    if (!points.contains(it.key())) throw FormatError("phi: unknown point '" + it.key() + "'");
  if (j.contains("L")) doc.f.lipschitz = read_number(j["L"], "L");
  return doc;
}

json write(const AxiomReport& r) {
  json v = json::array();
  for (const Violation& x : r.violations)
    v.push_back({{"axiom", x.axiom}, {"points", x.points}, {"params", x.params}, {"lhs", write_ext(x.lhs)},
                 {"rhs", write_ext(x.rhs)}});
  json props = json::object();
  for (const auto& [k, b] : r.properties) props[k] = b;
  return {{"checked", r.checked}, {"violations", v}, {"properties", props}, {"notes", r.notes}, {"ok", r.ok()}};
}

json write(const DistanceMatrix& d) {
  json rows = json::object();
  for (std::size_t x = 0; x < d.size(); ++x) {
    json row = json::object();
    for (std::size_t y = 0; y < d.size(); ++y) row[d.points().id(y)] = write_ext(d(x, y));
    rows[d.points().id(x)] = row;
  }
  return rows;
}

json write(const FiniteTopology& t) {
  json opens = json::array();
  for (Subset s : t.opens()) opens.push_back(subset_ids(t.points(), s));
  return opens;
}

json write(const JoinReport& r) {
  return {{"tau_plus", write(r.tau_plus)},
          {"tau_minus", write(r.tau_minus)},
          {"join", write(r.join)},
          {"tau_sym", write(r.tau_sym)},
          {"join_equals_sym", r.join_equals_sym}};
}

json write(const CoverResult& c, const PointSet& points) {
  json centers = json::array();
  for (std::size_t i : c.centers) centers.push_back(points.id(i));
  return {{"centers", centers},
          {"radius", c.radius},
          {"scale", c.scale},
          {"side", std::string(side_name(c.side))},
          {"verified", c.verified}};
}

std::string to_csv(const DistanceMatrix& d) {
  std::ostringstream os;
  os << "from";
  for (const auto& id : d.points().ids()) os << ',' << id;
  os << '\n';
  for (std::size_t x = 0; x < d.size(); ++x) {
    os << d.points().id(x);
    for (std::size_t y = 0; y < d.size(); ++y) {
      os << ',';
      if (d(x, y).is_infinite())
        os << "inf";
      else
        os << shortest(d(x, y).value());
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace quasimod::io
