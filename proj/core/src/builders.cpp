#include "quasimod/builders.hpp"

#include <algorithm>
#include <cmath>

#include "quasimod/error.hpp"
#include "quasimod/luxemburg.hpp"

namespace quasimod {
namespace {

// Shortest-path tables carry rounding from summation order, so the triangle
// is checked up to a few ulps of the largest finite entry.
void require_quasi_pseudometric(const DistanceMatrix& d, const char* what) {
  double scale = 1.0;
  for (ExtValue v : d.data())
    if (v.is_finite()) scale = std::max(scale, v.value());
  AxiomReport rep = quasi_pseudometric_check(d, 1e-12 * scale);
  if (rep.ok()) return;
  const Violation& v = rep.violations.front();
  std::string msg = std::string(what) + " violates " + v.axiom + " at (";
  for (std::size_t i = 0; i < v.points.size(); ++i) msg += (i ? "," : "") + v.points[i];
  msg += ")";
  throw AxiomError(v.axiom, v.points, v.params, msg);
}

PointSet default_points(const std::optional<PointSet>& points, std::size_t n) {
  if (!points) return PointSet::numbered(n);
  if (points->size() != n) throw InvalidArgument("point ids do not match coordinate count");
  return *points;
}

Vector difference(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("points have different dimensions");
  Vector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

Vector times(const Vector& v, double s) {
  Vector out(v);
  for (double& c : out) c *= s;
  return out;
}

}  // namespace

Gauge make_min_cap(const DistanceMatrix& rho) {
  require_quasi_pseudometric(rho, "min-cap distance");
  auto table = std::make_shared<const DistanceMatrix>(rho);
  Gauge g = Gauge::closed_form("min_cap", rho.points(), std::nullopt,
                               [table](std::size_t x, std::size_t y, double t) { return min((*table)(x, y), ExtValue(t)); });
  return g.with_claims(rho.is_symmetric(), false);
}

Gauge make_ratio(const DistanceMatrix& p, TConorm conorm) {
  require_quasi_pseudometric(p, "ratio-gauge distance");
  auto table = std::make_shared<const DistanceMatrix>(p);
  Gauge g = Gauge::closed_form("ratio", p.points(), conorm, [table](std::size_t x, std::size_t y, double t) {
    const ExtValue d = (*table)(x, y);
    if (d.is_zero()) return ExtValue{};
    if (d.is_infinite()) return ExtValue(kConormCeiling);
    return ExtValue(std::min(d.value() / (t + d.value()), kConormCeiling));
  });
  g = g.with_claims(p.is_symmetric(), false);
  const auto infinite = std::count_if(p.data().begin(), p.data().end(), [](ExtValue v) { return v.is_infinite(); });
  if (infinite > 0)
    g = g.with_warning(std::to_string(infinite) + " infinite distance(s) clamped to 1-2^-52 in the conorm codomain");
  return g;
}

Gauge make_scaled_metric(const DistanceMatrix& d, const Profile& g) {
  require_quasi_pseudometric(d, "scaled-metric distance");
  if (!d.is_symmetric()) throw InvalidArgument("scaled-metric construction needs a symmetric (pseudo)metric");
  if (auto inc = g.first_increase()) {
    const auto [i, j] = *inc;
    throw AxiomError("nonincreasing", {}, {g.grid()[i], g.grid()[j]},
                     "scale factor g increases between t=" + std::to_string(g.grid()[i]) +
                         " and t=" + std::to_string(g.grid()[j]));
  }
  bool convex = true;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    if (g[k + 1].scaled(g.grid()[k + 1]) > g[k].scaled(g.grid()[k])) convex = false;
  }
  auto table = std::make_shared<const DistanceMatrix>(d);
  auto factor = std::make_shared<const Profile>(g);
  Gauge out = Gauge::closed_form("scaled_metric", d.points(), std::nullopt,
                                 [table, factor](std::size_t x, std::size_t y, double t) {
                                   return (*table)(x, y).scaled(factor->at(t).value());
                                 });
  // g = inf at small scales would make 0 * inf ambiguous; scaled() treats it as 0.
  return out.with_claims(true, convex);
}

Gauge make_classical_modular(VectorFunctional rho, std::vector<Vector> coords, std::optional<PointSet> points) {
  if (!rho) throw InvalidArgument("classical modular needs a functional");
  PointSet ids = default_points(points, coords.size());
  const std::size_t dim = coords.empty() ? 0 : coords.front().size();
  const Vector zero(dim, 0.0);
  if (!rho(zero).is_zero()) throw AxiomError("rho-zero", {}, {}, "classical modular must vanish at 0");

  bool ray_ok = true;
  bool even = true;
  static constexpr double kRay[] = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
  for (std::size_t x = 0; x < coords.size() && ray_ok; ++x) {
    for (std::size_t y = 0; y < coords.size(); ++y) {
      const Vector v = difference(coords[x], coords[y]);
      if (rho(v) != rho(times(v, -1.0))) even = false;
      ExtValue prev = ExtValue::zero();
      for (std::size_t k = 1; k < std::size(kRay); ++k) {
        const ExtValue cur = rho(times(v, kRay[k]));
        if (cur < prev) ray_ok = false;
        prev = cur;
      }
      // midpoint convexity on the ray: rho(1 v) <= (rho(0.5 v) + rho(1.5 v)) / 2 etc.
      for (double s : {0.5, 1.0, 2.0}) {
        const ExtValue mid = rho(times(v, s));
        const ExtValue avg = (rho(times(v, s / 2)) + rho(times(v, 3 * s / 2))).scaled(0.5);
        if (mid.is_finite() && avg.is_finite() && mid.value() > avg.value() * (1 + 1e-12) + 1e-300) ray_ok = false;
      }
    }
  }

  auto pts = std::make_shared<const std::vector<Vector>>(std::move(coords));
  Gauge g = Gauge::closed_form("classical_modular", std::move(ids), std::nullopt,
                               [rho = std::move(rho), pts](std::size_t x, std::size_t y, double t) {
                                 return rho(times(difference((*pts)[x], (*pts)[y]), 1.0 / t));
                               });
  g = g.with_claims(even, ray_ok);
  if (!ray_ok) g = g.with_warning("functional is not convex nondecreasing on every sampled ray");
  return g;
}

Gauge make_asymmetric_sublinear(VectorFunctional p, std::vector<Vector> coords, std::optional<PointSet> points) {
  if (!p) throw InvalidArgument("sublinear gauge needs a functional");
  PointSet ids = default_points(points, coords.size());
  DistanceMatrix rho(ids);
  for (std::size_t x = 0; x < coords.size(); ++x)
    for (std::size_t y = 0; y < coords.size(); ++y) rho(x, y) = p(difference(coords[y], coords[x]));
  return make_min_cap(rho).with_name("asymmetric_sublinear");
}

VectorFunctional asymmetric_linear_functional(Vector up, Vector down) {
  if (up.size() != down.size()) throw InvalidArgument("up/down coefficient lengths differ");
  for (std::size_t i = 0; i < up.size(); ++i)
    if (!(up[i] >= 0.0) || !(down[i] >= 0.0)) throw InvalidArgument("sublinear coefficients must be >= 0");
  return [up = std::move(up), down = std::move(down)](std::span<const double> v) {
    if (v.size() != up.size()) throw InvalidArgument("vector dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] > 0 ? up[i] * v[i] : down[i] * -v[i];
    return ExtValue(s);
  };
}

}  // namespace quasimod
