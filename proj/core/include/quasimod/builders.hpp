#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quasimod/distance_matrix.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/scale.hpp"

namespace quasimod {

using Vector = std::vector<double>;
/// Functional on vectors, e.g. a classical modular or a sublinear gauge.
using VectorFunctional = std::function<ExtValue(std::span<const double>)>;

/// w_t(x, y) = min{rho(x, y), t}. rho is validated as a quasi-pseudometric
/// (AxiomError with witness otherwise).
Gauge make_min_cap(const DistanceMatrix& rho);

/// w(x, y, t) = p(x, y) / (t + p(x, y)) in the conorm regime. Infinite
/// distances would produce the excluded value 1; they are clamped to
/// kConormCeiling and recorded as a warning.
Gauge make_ratio(const DistanceMatrix& p, TConorm conorm = TConorm{});

/// w_t(x, y) = g(t) * d(x, y) for a (pseudo)metric d and nonincreasing g.
/// claims_convex is set iff t * g(t) is nonincreasing on g's grid.
Gauge make_scaled_metric(const DistanceMatrix& d, const Profile& g);

/// w_t(x, y) = rho((x - y) / t) for points in a real vector space.
/// Requires rho(0) = 0; rays through the sampled differences are probed for
/// convex nondecreasing behaviour and failures are recorded as warnings.
Gauge make_classical_modular(VectorFunctional rho, std::vector<Vector> coords,
                             std::optional<PointSet> points = std::nullopt);

/// min-cap gauge over rho(x, y) = p(y - x) for an asymmetric sublinear p.
Gauge make_asymmetric_sublinear(VectorFunctional p, std::vector<Vector> coords,
                                std::optional<PointSet> points = std::nullopt);

/// Piecewise-linear gauge p(v) = sum_i up_i * (v_i)_+ + down_i * (v_i)_-,
/// the standard asymmetric sublinear functional on R^k.
VectorFunctional asymmetric_linear_functional(Vector up, Vector down);

}  // namespace quasimod
