#include "quasimod/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "quasimod/builders.hpp"
#include "quasimod/error.hpp"

namespace quasimod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> dijkstra(const DirectedGraph& g, std::size_t source) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(g.size());
  for (const Edge& e : g.edges()) adj[e.from].emplace_back(e.to, e.cost);
  std::vector<double> dist(g.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (auto [v, c] : adj[u])
      if (d + c < dist[v]) {
        dist[v] = d + c;
        heap.emplace(dist[v], v);
      }
  }
  return dist;
}

void require_vertex(const DirectedGraph& g, std::size_t v) {
  if (v >= g.size()) throw InvalidArgument("vertex index out of range");
}

void require_function(const DirectedGraph& g, const std::vector<double>& f) {
  if (f.size() != g.size()) throw InvalidArgument("vertex function needs one value per vertex");
  for (double v : f)
    if (!std::isfinite(v)) throw InvalidArgument("vertex function values must be finite");
}

ExtValue energy(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi, bool forward) {
  require_function(g, f);
  ExtValue sum;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const double diff = forward ? f[e.to] - f[e.from] : f[e.from] - f[e.to];
    sum += ExtValue(phi(i, std::abs(diff))).scaled(e.mu);
  }
  return sum;
}

}  // namespace

DirectedGraph::DirectedGraph(PointSet vertices, std::vector<Edge> edges, std::vector<double> measure)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), measure_(std::move(measure)) {
  if (measure_.empty()) measure_.assign(vertices_.size(), 1.0);
  if (measure_.size() != vertices_.size()) throw InvalidArgument("graph measure needs one mass per vertex");
  for (double m : measure_)
    if (!(m > 0) || !std::isfinite(m)) throw InvalidArgument("vertex measure must be positive and finite");
  for (const Edge& e : edges_) {
    if (e.from >= vertices_.size() || e.to >= vertices_.size()) throw InvalidArgument("edge endpoint out of range");
    if (!(e.mu > 0) || !std::isfinite(e.mu)) throw InvalidArgument("edge weight mu must be positive and finite");
    if (!(e.cost >= 0) || !std::isfinite(e.cost)) throw InvalidArgument("edge cost must be finite and nonnegative");
  }
}

DirectedGraph DirectedGraph::transposed() const {
  std::vector<Edge> rev = edges_;
  for (Edge& e : rev) std::swap(e.from, e.to);
  return DirectedGraph(vertices_, std::move(rev), measure_);
}

DirectedGraph DirectedGraph::with_costs(const std::vector<double>& costs) const {
  if (costs.size() != edges_.size()) throw InvalidArgument("need one cost per edge");
  std::vector<Edge> e = edges_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i].cost = costs[i];
  return DirectedGraph(vertices_, std::move(e), measure_);
}

ExtValue forward_distance(const DirectedGraph& g, std::size_t x, std::size_t y) {
  require_vertex(g, x);
  require_vertex(g, y);
  return ExtValue(dijkstra(g, x)[y]);
}

ExtValue backward_distance(const DirectedGraph& g, std::size_t x, std::size_t y) {
  return forward_distance(g.transposed(), x, y);
}

DistanceMatrix forward_distances(const DirectedGraph& g) {
  DistanceMatrix d(g.vertices());
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto row = dijkstra(g, x);
    for (std::size_t y = 0; y < g.size(); ++y) d(x, y) = ExtValue(row[y]);
  }
  return d;
}

DistanceMatrix backward_distances(const DirectedGraph& g) { return forward_distances(g.transposed()); }

Gauge graph_gauge(const DirectedGraph& g) { return make_min_cap(forward_distances(g)).with_name("graph"); }

EdgeOrliczFamily EdgeOrliczFamily::power(double p) {
  if (!(p >= 1) || !std::isfinite(p)) throw InvalidArgument("power exponent must satisfy 1 <= p < inf");
  return EdgeOrliczFamily(p, p, {});
}

EdgeOrliczFamily EdgeOrliczFamily::double_phase(double p, double q, std::vector<double> a) {
  if (!(p >= 1) || !(q > p) || !std::isfinite(q)) throw InvalidArgument("double phase needs 1 <= p < q < inf");
  for (double v : a)
    if (!(v >= 0) || !std::isfinite(v)) throw InvalidArgument("double-phase weights must be finite and >= 0");
  if (a.empty()) throw InvalidArgument("double phase needs one weight per edge");
  return EdgeOrliczFamily(p, q, std::move(a));
}

double EdgeOrliczFamily::operator()(std::size_t edge, double s) const {
  const double base = std::pow(s, p_);
  if (a_.empty()) return base;
  if (edge >= a_.size()) throw InvalidArgument("double-phase weight missing for edge");
  // a = 0 must not meet s^q = inf
  return a_[edge] == 0.0 ? base : base + a_[edge] * std::pow(s, q_);
}

ExtValue forward_energy(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi) {
  return energy(g, f, phi, true);
}

ExtValue backward_energy(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi) {
  return energy(g, f, phi, false);
}

LuxemburgResult energy_luxemburg(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi,
                                 const LuxemburgOptions& opt) {
  require_function(g, f);
  std::vector<double> scaled(f.size());
  return luxemburg_infimum(
      [&](double lambda) {
        for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = f[i] / lambda;
        return forward_energy(g, scaled, phi);
      },
      opt);
}

void CostSchedule::validate(std::size_t edge_count) const {
  if (times.empty()) throw InvalidArgument("schedule needs at least one time");
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end())
    throw InvalidArgument("schedule times must be strictly increasing");
  if (costs.size() != times.size()) throw InvalidArgument("schedule needs one cost row per time");
  for (const auto& row : costs) {
    if (row.size() != edge_count) throw InvalidArgument("schedule must cover every edge at every time");
    for (double c : row)
      if (!(c > 0) || !std::isfinite(c)) throw InvalidArgument("scheduled costs must be positive and finite");
  }
}

DynamicDistance dynamic_distance(const DirectedGraph& g, const CostSchedule& s, double t, std::size_t x,
                                 std::size_t y) {
  s.validate(g.edges().size());
  const auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
  DynamicDistance res;
  std::size_t k = 0;
  if (it == s.times.begin()) {
    res.clamped = true;
  } else {
    k = static_cast<std::size_t>(it - s.times.begin()) - 1;
  }
  res.time_used = s.times[k];
  res.value = forward_distance(g.with_costs(s.costs[k]), x, y);
  return res;
}

double asymmetry_index(const DirectedGraph& g) {
  if (g.size() < 2) return 0.0;
  const DistanceMatrix d = forward_distances(g);
  std::size_t differ = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (x != y && d(x, y) != d(y, x)) ++differ;
  return static_cast<double>(differ) / static_cast<double>(g.size() * (g.size() - 1));
}

}  // namespace quasimod
