#include "quasimod/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "quasimod/error.hpp"
#include "quasimod/transforms.hpp"

namespace quasimod {
namespace {

Subset full_set(std::size_t n) { return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

void require_relation_size(std::size_t n) {
  if (n > kMaxRelationPoints) throw InvalidArgument("relations support at most 64 points");
}

void require_radius(const Gauge& g, double r, double t) {
  if (!(r > 0)) throw InvalidArgument("radius must be positive");
  if (g.is_conorm() && !(r < 1)) throw InvalidArgument("conorm-regime radius must lie in (0, 1)");
  if (!(t > 0)) throw InvalidArgument("scale must be positive");
}

double split(const Gauge& g, double r) { return g.is_conorm() ? g.conorm().split_radius(r) : r / 4; }

}  // namespace

Side parse_side(std::string_view s) {
  if (s == "forward") return Side::Forward;
  if (s == "backward") return Side::Backward;
  if (s == "sym" || s == "two_sided") return Side::TwoSided;
  throw InvalidArgument("unknown side '" + std::string(s) + "' (expected forward, backward or sym)");
}

std::string_view side_name(Side s) noexcept {
  switch (s) {
    case Side::Forward: return "forward";
    case Side::Backward: return "backward";
    case Side::TwoSided: return "sym";
  }
  return "";
}

std::vector<std::string> subset_ids(const PointSet& points, Subset s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((s >> i) & 1u) out.push_back(points.id(i));
  return out;
}

Subset ball(const Gauge& g, std::size_t x, double r, double t, Side side) {
  require_relation_size(g.size());
  require_radius(g, r, t);
  if (x >= g.size()) throw InvalidArgument("ball centre out of range");
  Subset out = 0;
  for (std::size_t y = 0; y < g.size(); ++y) {
    bool in = true;
    if (side != Side::Backward) in = in && g(x, y, t).value() < r;
    if (side != Side::Forward) in = in && g(y, x, t).value() < r;
    if (in) out |= Subset{1} << y;
  }
  return out;
}

Relation::Relation(PointSet points) : points_(std::move(points)), rows_(points_.size(), 0) {
  require_relation_size(points_.size());
}

Relation::Relation(PointSet points, std::vector<Subset> rows) : points_(std::move(points)), rows_(std::move(rows)) {
  require_relation_size(points_.size());
  if (rows_.size() != points_.size()) throw InvalidArgument("relation needs one row per point");
  const Subset mask = full_set(points_.size());
  for (Subset r : rows_)
    if (r & ~mask) throw InvalidArgument("relation row refers to a point outside the set");
}

Relation Relation::identity(PointSet points) {
  Relation r(std::move(points));
  for (std::size_t x = 0; x < r.size(); ++x) r.insert(x, x);
  return r;
}

Relation Relation::transposed() const {
  Relation out(points_);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (contains(x, y)) out.insert(y, x);
  return out;
}

bool Relation::is_subset_of(const Relation& other) const { return !first_excess(other); }

bool Relation::contains_diagonal() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!contains(x, x)) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> Relation::first_excess(const Relation& other) const {
  if (!(points_ == other.points_)) throw InvalidArgument("relations over different point sets");
  for (std::size_t x = 0; x < size(); ++x)
    if (Subset extra = rows_[x] & ~other.rows_[x])
      return std::pair{x, static_cast<std::size_t>(std::countr_zero(extra))};
  return std::nullopt;
}

Relation operator&(const Relation& a, const Relation& b) {
  if (!(a.points_ == b.points_)) throw InvalidArgument("relations over different point sets");
  Relation out(a.points_);
  for (std::size_t x = 0; x < a.size(); ++x) out.rows_[x] = a.rows_[x] & b.rows_[x];
  return out;
}

Relation entourage(const Gauge& g, double r, double t, Side side) {
  std::vector<Subset> rows(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) rows[x] = ball(g, x, r, t, side);
  return Relation(g.points(), std::move(rows));
}

Relation compose(const Relation& a, const Relation& b) {
  if (!(a.points() == b.points())) throw InvalidArgument("compose: relations over different point sets");
  std::vector<Subset> rows(a.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (Subset mid = a.row(x); mid; mid &= mid - 1) rows[x] |= b.row(static_cast<std::size_t>(std::countr_zero(mid)));
  return Relation(a.points(), std::move(rows));
}

ThresholdSet critical_thresholds(const Gauge& g, const ScaleGrid& grid) {
  std::set<double> values;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      for (double t : grid.scales()) {
        const ExtValue v = g(x, y, t);
        if (v.is_finite() && !v.is_zero()) values.insert(v.value());
      }
  std::vector<double> radii;
  double prev = 0.0;
  for (double v : values) {
    radii.push_back(prev + (v - prev) / 2);
    radii.push_back(v);
    prev = v;
  }
  radii.push_back(g.is_conorm() ? (prev + 1.0) / 2 : prev + 1.0);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  // a midpoint can round onto an endpoint; radii must stay positive
  radii.erase(std::remove_if(radii.begin(), radii.end(), [](double r) { return !(r > 0); }), radii.end());
  return {std::move(radii), grid};
}

bool FiniteTopology::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

FiniteTopology topology_from_neighbourhoods(PointSet points, std::vector<Subset> minimal) {
  const std::size_t n = points.size();
  if (n > kMaxTopologyPoints) throw InvalidArgument("topologies are enumerated for at most 20 points");
  if (minimal.size() != n) throw InvalidArgument("need one neighbourhood per point");
  for (std::size_t x = 0; x < n; ++x)
    if (!((minimal[x] >> x) & 1u)) throw InvalidArgument("a neighbourhood must contain its point");

  FiniteTopology top;
  const Subset all = full_set(n);
  for (Subset s = 0;; ++s) {
    bool open = true;
    for (Subset rest = s; rest && open; rest &= rest - 1)
      open = (minimal[static_cast<std::size_t>(std::countr_zero(rest))] & ~s) == 0;
    if (open) top.opens_.push_back(s);
    if (s == all) break;
  }
  top.minimal_.assign(n, all);
  for (Subset u : top.opens_)
    for (Subset rest = u; rest; rest &= rest - 1) top.minimal_[static_cast<std::size_t>(std::countr_zero(rest))] &= u;
  top.points_ = std::move(points);
  return top;
}

FiniteTopology generate_topology(const PointSet& points, const std::vector<Subset>& family) {
  const std::size_t n = points.size();
  if (n > kMaxTopologyPoints) throw InvalidArgument("topologies are enumerated for at most 20 points");
  const Subset all = full_set(n);
  std::vector<Subset> minimal(n, all);
  for (Subset s : family) {
    if (s & ~all) throw InvalidArgument("family member is not a subset of the points");
    for (Subset rest = s; rest; rest &= rest - 1) minimal[static_cast<std::size_t>(std::countr_zero(rest))] &= s;
  }
  return topology_from_neighbourhoods(points, std::move(minimal));
}

FiniteTopology join_topologies(const FiniteTopology& a, const FiniteTopology& b) {
  if (!(a.points() == b.points())) throw InvalidArgument("join: topologies over different point sets");
  std::vector<Subset> minimal(a.points().size());
  for (std::size_t x = 0; x < minimal.size(); ++x)
    minimal[x] = a.minimal_neighbourhoods()[x] & b.minimal_neighbourhoods()[x];
  return topology_from_neighbourhoods(a.points(), std::move(minimal));
}

FiniteTopology gauge_topology(const Gauge& g, const ScaleGrid& grid, Side side) {
  const ThresholdSet th = critical_thresholds(g, grid);
  std::vector<Subset> family;
  for (double t : th.scales.scales())
    for (double r : th.radii)
      for (std::size_t x = 0; x < g.size(); ++x) family.push_back(ball(g, x, r, t, side));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return generate_topology(g.points(), family);
}

JoinReport verify_join_equality(const Gauge& g, const ScaleGrid& grid) {
  FiniteTopology plus = gauge_topology(g, grid, Side::Forward);
  FiniteTopology minus = gauge_topology(g, grid, Side::Backward);
  FiniteTopology join = join_topologies(plus, minus);
  const Gauge sym = g.is_conorm() ? symmetrize_conorm(g) : symmetrize_max(g);
  FiniteTopology tau_sym = gauge_topology(sym, grid, Side::TwoSided);
  const bool equal = join == tau_sym;
  return {std::move(plus), std::move(minus), std::move(join), std::move(tau_sym), equal};
}

AxiomReport small_composite_check(const Gauge& g, const ScaleGrid& grid) {
  const ThresholdSet th = critical_thresholds(g, grid);
  const auto& ids = g.points().ids();
  AxiomReport rep;
  rep.checked = {"QN4-forward", "QN4-backward"};
  for (double t : th.scales.scales())
    for (double r : th.radii) {
      const double rs = split(g, r);
      for (Side side : {Side::Forward, Side::Backward}) {
        const Relation small = entourage(g, rs, t, side);
        const Relation big = entourage(g, r, t, side);
        const Relation comp = compose(small, small);
        for (std::size_t x = 0; x < comp.size(); ++x) {
          for (Subset extra = comp.row(x) & ~big.row(x); extra; extra &= extra - 1) {
            const auto z = static_cast<std::size_t>(std::countr_zero(extra));
            std::size_t y = 0;
            while (!(small.contains(x, y) && small.contains(y, z))) ++y;
            const ExtValue lhs = side == Side::Forward ? g(x, z, t) : g(z, x, t);
            rep.violations.push_back({std::string("QN4-") + std::string(side_name(side)),
                                      {ids[x], ids[y], ids[z]}, {r, t, rs}, lhs, ExtValue(r)});
          }
        }
      }
    }
  rep.sort();
  return rep;
}

AxiomReport quasi_uniformity_report(const Gauge& g, const ScaleGrid& grid) {
  const ThresholdSet th = critical_thresholds(g, grid);
  const auto& ids = g.points().ids();
  const auto& scales = th.scales.scales();
  AxiomReport rep;
  rep.checked = {"QN1", "QN2", "QN3"};
  rep.notes.push_back("QN2 holds by representation: entourages are generated as an upward-closed filter base");

  for (double t : scales)
    for (double r : th.radii)
      for (std::size_t x = 0; x < g.size(); ++x)
        if (!(g(x, x, t).value() < r)) rep.violations.push_back({"QN1", {ids[x]}, {r, t}, g(x, x, t), ExtValue(r)});

  // E(min r, min t) lies in E(r1, t1) and E(r2, t2) iff entourages grow
  // with t at fixed r; growth in r is automatic for strict balls.
  for (double r : th.radii)
    for (std::size_t k = 0; k + 1 < scales.size(); ++k) {
      const Relation lo = entourage(g, r, scales[k], Side::Forward);
      const Relation hi = entourage(g, r, scales[k + 1], Side::Forward);
      for (std::size_t x = 0; x < lo.size(); ++x)
        for (Subset extra = lo.row(x) & ~hi.row(x); extra; extra &= extra - 1) {
          const auto y = static_cast<std::size_t>(std::countr_zero(extra));
          rep.violations.push_back({"QN3", {ids[x], ids[y]}, {r, scales[k], scales[k + 1]}, g(x, y, scales[k + 1]), ExtValue(r)});
        }
    }

  rep.merge(small_composite_check(g, grid));
  rep.sort();
  return rep;
}

}  // namespace quasimod
