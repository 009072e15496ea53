#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "quasimod/gauge.hpp"
#include "quasimod/report.hpp"
#include "quasimod/scale.hpp"

namespace quasimod {

struct CheckOptions {
  /// Relative slack for inequality comparisons; absorbs rounding in
  /// tabulated arithmetic without hiding genuine violations.
  double rel_tol = 1e-12;
  /// When set, the triangle axiom is checked on this many random
  /// (x, y, z, t, s) instances drawn with `seed` instead of exhaustively.
  std::optional<std::size_t> triangle_samples;
  std::uint64_t seed = 0;
};

/// True when lhs <= rhs fails beyond the relative slack.
bool exceeds(ExtValue lhs, ExtValue rhs, double rel_tol);

/// Exhaustive grid sweep of the gauge axioms.
///
/// Additive regime: QM1 (w_t(x,x) = 0), QM2 (w_{t#s}(x,z) <= w_t(x,y) +
/// w_s(y,z) where t#s is the smallest grid scale >= t+s, or t+s itself past
/// the last scale) and QM3 (nonincreasing in t). Conorm regime: W1 (zero
/// diagonal, values below 1), W3 (triangle with (+)) and W4 (nonincreasing). Witness params for triangles are
/// (t, s, t#s); for monotonicity (t_k, t_{k+1}).
///
/// properties["symmetric"] and properties["separating"] are informational;
/// a false symmetry claim is reported as a "symmetry-claim" violation.
AxiomReport check_axioms(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt = {});

/// Additive regime: t * w_t nonincreasing between consecutive scales
/// ("convex") and w_mu <= (lambda / mu) * w_lambda for every grid pair
/// lambda < mu ("scale-bound"). Throws InvalidArgument on conorm gauges.
AxiomReport convexity_check(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt = {});

/// W(x,z)(u) <= (W(x,y) * W(y,z))(u) for every triple and grid scale u,
/// with * the grid convolution. Conorm regime only.
AxiomReport enriched_triangle_check(const Gauge& g, const ScaleGrid& grid, const CheckOptions& opt = {});

}  // namespace quasimod
