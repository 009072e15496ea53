#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasimod/gauge.hpp"
#include "quasimod/point_set.hpp"
#include "quasimod/report.hpp"
#include "quasimod/scale.hpp"

namespace quasimod {

/// Subset of a point set as a bitmask over point indices.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxRelationPoints = 64;
/// Topologies are enumerated extensionally over all 2^n subsets.
inline constexpr std::size_t kMaxTopologyPoints = 20;

enum class Side { Forward, Backward, TwoSided };

/// "forward" | "backward" | "sym" | "two_sided"
Side parse_side(std::string_view s);
std::string_view side_name(Side s) noexcept;

std::vector<std::string> subset_ids(const PointSet& points, Subset s);

/// {y : w(x, y, t) < r}, {y : w(y, x, t) < r}, or their intersection.
Subset ball(const Gauge& g, std::size_t x, double r, double t, Side side);

/// Boolean matrix over points x points, stored as one bitmask row per point.
class Relation {
 public:
  explicit Relation(PointSet points);
  Relation(PointSet points, std::vector<Subset> rows);

  static Relation identity(PointSet points);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Subset>& rows() const noexcept { return rows_; }
  Subset row(std::size_t x) const { return rows_[x]; }

  bool contains(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1u; }
  void insert(std::size_t x, std::size_t y) { rows_[x] |= Subset{1} << y; }

  Relation transposed() const;
  bool is_subset_of(const Relation& other) const;
  bool contains_diagonal() const;
  /// First pair (x, y) in this relation but not in `other`.
  std::optional<std::pair<std::size_t, std::size_t>> first_excess(const Relation& other) const;

  friend Relation operator&(const Relation& a, const Relation& b);
  friend bool operator==(const Relation& a, const Relation& b) = default;

 private:
  PointSet points_;
  std::vector<Subset> rows_;
};

/// E_{r,t}: forward {(x,y) : w(x,y,t) < r}; backward is its transpose;
/// two-sided is the intersection of both.
Relation entourage(const Gauge& g, double r, double t, Side side);

/// (x, z) related iff some y has a(x, y) and b(y, z).
Relation compose(const Relation& a, const Relation& b);

/// Radii and scales whose products enumerate every distinct ball.
struct ThresholdSet {
  std::vector<double> radii;
  ScaleGrid scales;
};

/// Radii are the distinct positive finite gauge values on the grid, the
/// midpoints between consecutive ones (and between 0 and the smallest), and
/// one radius above the maximum. Balls are constant in r between these.
ThresholdSet critical_thresholds(const Gauge& g, const ScaleGrid& grid);

/// Open sets of a finite space in canonical (ascending bitmask) order.
class FiniteTopology {
 public:
  const PointSet& points() const noexcept { return points_; }
  const std::vector<Subset>& opens() const noexcept { return opens_; }
  /// Smallest open set containing each point.
  const std::vector<Subset>& minimal_neighbourhoods() const noexcept { return minimal_; }
  bool is_open(Subset s) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

 private:
  friend FiniteTopology topology_from_neighbourhoods(PointSet points, std::vector<Subset> minimal);

  PointSet points_;
  std::vector<Subset> opens_;
  std::vector<Subset> minimal_;
};

/// Topology with the given minimal neighbourhoods; each must contain its point.
FiniteTopology topology_from_neighbourhoods(PointSet points, std::vector<Subset> minimal);

/// Smallest topology containing every set of the family. When the family is
/// a base this is the family of its unions; otherwise finite intersections
/// are added, so the result is always closed under intersection.
FiniteTopology generate_topology(const PointSet& points, const std::vector<Subset>& family);

/// Least topology finer than both.
FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b);

/// Topology generated by all balls of one side over the critical thresholds.
FiniteTopology gauge_topology(const Gauge& g, const ScaleGrid& grid, Side side);

struct JoinReport {
  FiniteTopology tau_plus;
  FiniteTopology tau_minus;
  FiniteTopology join;
  FiniteTopology tau_sym;
  bool join_equals_sym = false;
};

/// Compares the join of the forward and backward topologies with the
/// topology of two-sided balls of the conorm-symmetrized gauge.
JoinReport verify_join_equality(const Gauge& g, const ScaleGrid& grid);

/// E_{r',t} o E_{r',t} within E_{r,t} for r' = split_radius(r), both sides,
/// at every critical threshold. Witness points (x, y, z) with y the middle
/// point; params (r, t, r').
AxiomReport small_composite_check(const Gauge& g, const ScaleGrid& grid);

/// QN1 (diagonal), QN2 (by representation), QN3 (intersection refinement by
/// (min r, min t)) and QN4 via small_composite_check.
AxiomReport quasi_uniformity_report(const Gauge& g, const ScaleGrid& grid);

}  // namespace quasimod
