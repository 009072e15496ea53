#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasimod/distance_matrix.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/luxemburg.hpp"
#include "quasimod/point_set.hpp"

namespace quasimod {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  double mu = 1.0;
  double cost = 1.0;
};

/// Finite directed graph with edge weights mu > 0, finite costs >= 0 and a
/// positive vertex measure (all ones by default).
class DirectedGraph {
 public:
  DirectedGraph(PointSet vertices, std::vector<Edge> edges, std::vector<double> measure = {});

  const PointSet& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& measure() const noexcept { return measure_; }

  /// Every edge reversed; weights and costs unchanged.
  DirectedGraph transposed() const;
  /// Same graph with the given per-edge costs.
  DirectedGraph with_costs(const std::vector<double>& costs) const;

 private:
  PointSet vertices_;
  std::vector<Edge> edges_;
  std::vector<double> measure_;
};

/// Least directed path cost from x to y (Dijkstra); +inf when unreachable.
ExtValue forward_distance(const DirectedGraph& g, std::size_t x, std::size_t y);
ExtValue backward_distance(const DirectedGraph& g, std::size_t x, std::size_t y);
DistanceMatrix forward_distances(const DirectedGraph& g);
DistanceMatrix backward_distances(const DirectedGraph& g);

/// min{forward distance, lambda}.
Gauge graph_gauge(const DirectedGraph& g);

/// phi(e, s) = s^p + a(e) s^q, with a empty for the pure power s^p.
class EdgeOrliczFamily {
 public:
  static EdgeOrliczFamily power(double p);
  static EdgeOrliczFamily double_phase(double p, double q, std::vector<double> a);

  double operator()(std::size_t edge, double s) const;
  double p() const noexcept { return p_; }
  bool is_power() const noexcept { return a_.empty(); }

 private:
  EdgeOrliczFamily(double p, double q, std::vector<double> a) : p_(p), q_(q), a_(std::move(a)) {}
  double p_, q_;
  std::vector<double> a_;
};

/// sum_e mu(e) phi(e, |f(v) - f(u)|) over edges e = u -> v.
ExtValue forward_energy(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi);
/// Same sum with the backward difference f(u) - f(v).
ExtValue backward_energy(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi);

/// inf{lambda > 0 : forward_energy(f / lambda) <= 1}.
LuxemburgResult energy_luxemburg(const DirectedGraph& g, const std::vector<double>& f, const EdgeOrliczFamily& phi,
                                 const LuxemburgOptions& opt = {});

/// Piecewise-constant edge costs: costs[k][e] applies from times[k] until the next listed time.
struct CostSchedule {
  std::vector<double> times;
  std::vector<std::vector<double>> costs;

  void validate(std::size_t edge_count) const;
};

struct DynamicDistance {
  ExtValue value;
  /// Listed time whose costs were used.
  double time_used = 0.0;
  /// True when t precedes the first listed time.
  bool clamped = false;
};

/// Forward distance with costs frozen at the latest listed time <= t.
DynamicDistance dynamic_distance(const DirectedGraph& g, const CostSchedule& s, double t, std::size_t x,
                                 std::size_t y);

/// Fraction of ordered pairs x != y whose forward distances differ in the two directions.
double asymmetry_index(const DirectedGraph& g);

}  // namespace quasimod
