#pragma once

#include <cstddef>
#include <vector>

#include "quasimod/distance_matrix.hpp"
#include "quasimod/report.hpp"

namespace quasimod {

/// phi on a nonempty domain A (point indices) with Lipschitz constant L >= 0.
struct PartialFunction {
  std::vector<std::size_t> domain;
  std::vector<double> values;
  double lipschitz = 1.0;
};

/// inf_{a in A} (phi(a) + L d(x, a)). Values may be +inf where d is infinite.
std::vector<double> upper_envelope(const PartialFunction& f, const DistanceMatrix& d);

/// sup_{a in A} (phi(a) - L d(a, x)). Values may be -inf where d is infinite.
std::vector<double> lower_envelope(const PartialFunction& f, const DistanceMatrix& d);

/// phi(b) - phi(a) <= L d(b, a) on A; the condition under which both
/// envelopes agree with phi on A.
bool is_one_sided_lipschitz(const PartialFunction& f, const DistanceMatrix& d);

/// F(x) - F(y) <= L d(x, y) for all x, y ("lipschitz"); violations carry
/// points (x, y).
AxiomReport lipschitz_check(const std::vector<double>& F, const DistanceMatrix& d, double L, double abs_slack = 0.0);

}  // namespace quasimod
