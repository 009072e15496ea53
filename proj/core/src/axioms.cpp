#include "quasimod/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "quasimod/error.hpp"
#include "quasimod/transforms.hpp"

namespace quasimod {
namespace {

// Dense copy of the gauge on an extended scale list: the grid, followed by
// the sums t_i + t_j that lie beyond it. values[(x * n + y) * m + k].
struct Samples {
  std::size_t n, m;
  std::vector<double> scales;
  std::vector<ExtValue> values;
  ExtValue at(std::size_t x, std::size_t y, std::size_t k) const { return values[(x * n + y) * m + k]; }
};

// Sum scale for (t_i, t_j): the smallest grid scale >= t_i + t_j, or the sum
// itself when it lies beyond the grid. Reading a closed-form gauge at the
// last grid scale there would overstate the left side of the triangle; for a
// tabulated gauge the two readings agree.
struct SumIndex {
  std::vector<double> extra;
  std::vector<std::size_t> proj;  // proj[i * m + j], indices into grid + extra
};

SumIndex projected_sums(const ScaleGrid& grid) {
  const std::size_t m = grid.size();
  SumIndex out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (grid[i] + grid[j] > grid.back()) out.extra.push_back(grid[i] + grid[j]);
  std::sort(out.extra.begin(), out.extra.end());
  out.extra.erase(std::unique(out.extra.begin(), out.extra.end()), out.extra.end());
  out.proj.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double u = grid[i] + grid[j];
      out.proj[i * m + j] =
          u > grid.back()
              ? m + static_cast<std::size_t>(std::lower_bound(out.extra.begin(), out.extra.end(), u) - out.extra.begin())
              : grid.ceil_index(u);
    }
  return out;
}

Samples sample(const Gauge& g, const ScaleGrid& grid, const std::vector<double>& extra = {}) {
  Samples s{g.size(), grid.size() + extra.size(), grid.scales(), {}};
  s.scales.insert(s.scales.end(), extra.begin(), extra.end());
  s.values.resize(s.n * s.n * s.m);
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y)
      for (std::size_t k = 0; k < s.m; ++k) s.values[(x * s.n + y) * s.m + k] = g(x, y, s.scales[k]);
  return s;
}

}  // namespace

bool exceeds(ExtValue lhs, ExtValue rhs, double rel_tol) {
  if (!(lhs > rhs)) return false;
  if (lhs.is_infinite()) return true;
  return lhs.value() - rhs.value() > rel_tol * lhs.value();
}

AxiomReport check_axioms(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt) {
  const bool conorm = g.is_conorm();
  const TConorm op = conorm ? g.conorm() : TConorm{};
  const SumIndex sums = projected_sums(grid);
  const Samples s = sample(g, grid, sums.extra);
  const auto& proj = sums.proj;
  const auto& ids = g.points().ids();
  const std::size_t n = s.n, m = grid.size();

  AxiomReport rep;
  const std::string a1 = conorm ? "W1" : "QM1";
  const std::string a3 = conorm ? "W3" : "QM2";
  const std::string a4 = conorm ? "W4" : "QM3";
  rep.checked = {a1, a3, a4};

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < m; ++k)
      if (!s.at(x, x, k).is_zero()) rep.violations.push_back({a1, {ids[x]}, {grid[k]}, s.at(x, x, k), ExtValue{}});

  bool separating = true;
  if (conorm) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < m; ++k) {
          const ExtValue v = s.at(x, y, k);
          if (!(v.value() < 1.0)) rep.violations.push_back({a1, {ids[x], ids[y]}, {grid[k]}, v, ExtValue(1.0)});
          if (x != y && v.is_zero()) separating = false;
        }
  }

  auto triangle = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j) {
    const std::size_t k = proj[i * m + j];
    const ExtValue lhs = s.at(x, z, k);
    const ExtValue a = s.at(x, y, i), b = s.at(y, z, j);
    const ExtValue rhs = conorm ? ExtValue(op(a.value(), b.value())) : a + b;
    if (exceeds(lhs, rhs, opt.rel_tol))
      rep.violations.push_back({a3, {ids[x], ids[y], ids[z]}, {grid[i], grid[j], s.scales[k]}, lhs, rhs});
  };
  if (opt.triangle_samples && n > 0) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pt(0, n - 1), sc(0, m - 1);
    for (std::size_t draw = 0; draw < *opt.triangle_samples; ++draw) {
      const std::size_t x = pt(rng), y = pt(rng), z = pt(rng), i = sc(rng), j = sc(rng);
      triangle(x, y, z, i, j);
    }
    rep.notes.push_back(a3 + " sampled on " + std::to_string(*opt.triangle_samples) + " instances, seed " +
                        std::to_string(opt.seed));
  } else {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) triangle(x, y, z, i, j);
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k + 1 < m; ++k)
        if (exceeds(s.at(x, y, k + 1), s.at(x, y, k), opt.rel_tol))
          rep.violations.push_back({a4, {ids[x], ids[y]}, {grid[k], grid[k + 1]}, s.at(x, y, k + 1), s.at(x, y, k)});

  bool symmetric = true;
  std::optional<Violation> asym;
  for (std::size_t x = 0; x < n && symmetric; ++x)
    for (std::size_t y = x + 1; y < n && symmetric; ++y)
      for (std::size_t k = 0; k < m; ++k)
        if (s.at(x, y, k) != s.at(y, x, k)) {
          symmetric = false;
          asym = Violation{"symmetry-claim", {ids[x], ids[y]}, {grid[k]}, s.at(x, y, k), s.at(y, x, k)};
          break;
        }
  rep.properties["symmetric"] = symmetric;
  if (conorm) rep.properties["separating"] = separating;
  if (g.claims_symmetric()) {
    rep.checked.push_back("symmetry-claim");
    if (!symmetric) rep.violations.push_back(*asym);
  }
  rep.sort();
  return rep;
}

AxiomReport convexity_check(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt) {
  if (g.is_conorm()) throw InvalidArgument("convexity_check applies to additive-regime gauges");
  const Samples s = sample(g, grid);
  const auto& ids = g.points().ids();
  AxiomReport rep;
  rep.checked = {"convex", "scale-bound"};
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y) {
      for (std::size_t k = 0; k + 1 < s.m; ++k) {
        const ExtValue lo = s.at(x, y, k).scaled(grid[k]);
        const ExtValue hi = s.at(x, y, k + 1).scaled(grid[k + 1]);
        if (exceeds(hi, lo, opt.rel_tol)) rep.violations.push_back({"convex", {ids[x], ids[y]}, {grid[k], grid[k + 1]}, hi, lo});
      }
      for (std::size_t i = 0; i < s.m; ++i)
        for (std::size_t j = i + 1; j < s.m; ++j) {
          const ExtValue lhs = s.at(x, y, j);
          const ExtValue rhs = s.at(x, y, i).scaled(grid[i] / grid[j]);
          if (exceeds(lhs, rhs, opt.rel_tol))
            rep.violations.push_back({"scale-bound", {ids[x], ids[y]}, {grid[i], grid[j]}, lhs, rhs});
        }
    }
  rep.properties["convex"] = rep.ok();
  rep.sort();
  return rep;
}

AxiomReport enriched_triangle_check(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt) {
  const TConorm op = g.conorm();
  const std::size_t n = g.size();
  const auto& ids = g.points().ids();
  std::vector<Profile> hom;
  hom.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom.push_back(g.profile(x, y, grid));

  AxiomReport rep;
  rep.checked = {"enriched-triangle"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Profile conv = profile_convolve(hom[x * n + y], hom[y * n + z], op);
        const Profile& direct = hom[x * n + z];
        for (std::size_t k = 0; k < grid.size(); ++k)
          if (exceeds(direct[k], conv[k], opt.rel_tol))
            rep.violations.push_back({"enriched-triangle", {ids[x], ids[y], ids[z]}, {grid[k]}, direct[k], conv[k]});
      }
    }
  rep.sort();
  return rep;
}

}  // namespace quasimod
