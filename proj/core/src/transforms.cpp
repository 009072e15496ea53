#include "quasimod/transforms.hpp"

#include <algorithm>

#include "quasimod/error.hpp"

namespace quasimod {
namespace {

// Applies a pointwise combination of w(x,y,t) and w(y,x,t). Tabulated
// inputs stay tabulated so downstream checks see the same grid.
template <class Combine>
Gauge pairwise(const Gauge& g, std::string name, Combine combine) {
  if (const ScaleGrid* grid = g.grid()) {
    const std::size_t n = g.size(), m = grid->size();
    std::vector<ExtValue> values(n * n * m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < m; ++k) {
          const double t = (*grid)[k];
          values[(x * n + y) * m + k] = combine(g(x, y, t), g(y, x, t));
        }
    std::optional<TConorm> c;
    if (g.is_conorm()) c = g.conorm();
    return Gauge::tabulated(g.points(), *grid, c, std::move(values)).with_name(std::move(name));
  }
  std::optional<TConorm> c;
  if (g.is_conorm()) c = g.conorm();
  return Gauge::closed_form(std::move(name), g.points(), c,
                            [g, combine](std::size_t x, std::size_t y, double t) { return combine(g(x, y, t), g(y, x, t)); });
}

}  // namespace

Gauge symmetrize_max(const Gauge& g) {
  if (g.is_conorm()) throw InvalidArgument("symmetrize_max expects an additive-regime gauge");
  return pairwise(g, "sym_max(" + g.name() + ")", [](ExtValue a, ExtValue b) { return max(a, b); })
      .with_claims(true, g.claims_convex());
}

Gauge symmetrize_conorm(const Gauge& g) {
  const TConorm c = g.conorm();
  return pairwise(g, "sym_" + std::string(c.name()) + "(" + g.name() + ")",
                  [c](ExtValue a, ExtValue b) { return ExtValue(std::min(c(a.value(), b.value()), kConormCeiling)); })
      .with_claims(true, false);
}

Gauge opposite(const Gauge& g) {
  return pairwise(g, "op(" + g.name() + ")", [](ExtValue, ExtValue b) { return b; })
      .with_claims(g.claims_symmetric(), g.claims_convex());
}

Profile profile_convolve(const Profile& phi, const Profile& psi, TConorm conorm) {
  if (!(phi.grid() == psi.grid())) throw InvalidArgument("profile_convolve needs profiles on the same grid");
  for (const Profile* p : {&phi, &psi})
    for (ExtValue v : p->values())
      if (v.value() > 1.0) throw InvalidArgument("profile_convolve needs values in [0, 1]");

  const ScaleGrid& grid = phi.grid();
  const std::size_t m = grid.size();
  // (+) is monotone, so min_j (phi_i (+) psi_j) = phi_i (+) min_j psi_j over
  // the admissible prefix of j.
  std::vector<double> psi_prefix_min(m);
  for (std::size_t j = 0; j < m; ++j)
    psi_prefix_min[j] = j == 0 ? psi[0].value() : std::min(psi_prefix_min[j - 1], psi[j].value());

  std::vector<ExtValue> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = grid[k];
    double best = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double ti = grid[i];
      // number of j with t_i + t_j <= u; the predicate is monotone in j
      const auto& s = grid.scales();
      const auto end = std::partition_point(s.begin(), s.end(), [&](double tj) { return ti + tj <= u; });
      const auto count = static_cast<std::size_t>(end - s.begin());
      if (count == 0) break;
      best = std::min(best, conorm(phi[i].value(), psi_prefix_min[count - 1]));
    }
    out[k] = ExtValue(best);
  }
  return Profile(grid, std::move(out));
}

}  // namespace quasimod
