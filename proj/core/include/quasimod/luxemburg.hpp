#pragma once

#include <cstddef>
#include <functional>

#include "quasimod/distance_matrix.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/report.hpp"

namespace quasimod {

struct LuxemburgOptions {
  double threshold = 1.0;
  double tol = 1e-9;
  double lambda_max = 1e12;
};

struct LuxemburgResult {
  ExtValue value;
  /// Final bracket: the level condition fails at `lower` and holds at `upper`.
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};

/// inf{ lambda in (0, lambda_max] : level(lambda) <= threshold }.
///
/// Probes lambda_max, then doubles from tol until the condition holds and
/// bisects the bracket to width tol. An infimum below tol is refined on a
/// geometric scale down to the smallest normal double, below which the
/// value is reported as exactly 0. Every probed level is required to be
/// nonincreasing in lambda; otherwise NonMonotoneError is thrown, because
/// the admissible set would not be an upper set and the infimum would not
/// be the boundary that bisection finds.
LuxemburgResult luxemburg_infimum(const std::function<ExtValue(double)>& level, const LuxemburgOptions& opt = {});

/// d_w^(c)(x, y) for an additive-regime gauge.
LuxemburgResult luxemburg_distance(const Gauge& g, std::size_t x, std::size_t y, const LuxemburgOptions& opt = {});

/// max{ d_w(x, y), d_w(y, x) }.
ExtValue symmetrized_luxemburg(const Gauge& g, std::size_t x, std::size_t y, const LuxemburgOptions& opt = {});

/// All directed Luxemburg values.
DistanceMatrix luxemburg_matrix(const Gauge& g, const LuxemburgOptions& opt = {});

/// Reflexivity (d(x,x) = 0, exact) and triangle d(x,z) <= d(x,y) + d(y,z)
/// up to an absolute slack. properties["symmetric"] is informational.
/// Witness params are empty; points are (x) or (x, y, z).
AxiomReport quasi_pseudometric_check(const DistanceMatrix& d, double abs_slack = 0.0);

}  // namespace quasimod
