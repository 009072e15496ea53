#include "quasimod/envelopes.hpp"

#include <cmath>
#include <limits>

#include "quasimod/error.hpp"

namespace quasimod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const PartialFunction& f, const DistanceMatrix& d) {
  if (f.domain.empty()) throw InvalidArgument("envelope: empty domain");
  if (f.domain.size() != f.values.size()) throw InvalidArgument("envelope: one value per domain point");
  if (!(f.lipschitz >= 0) || !std::isfinite(f.lipschitz)) throw InvalidArgument("envelope: L must be finite and >= 0");
  for (std::size_t a : f.domain)
    if (a >= d.size()) throw InvalidArgument("envelope: domain point outside the distance table");
  for (double v : f.values)
    if (!std::isfinite(v)) throw InvalidArgument("envelope: values must be finite");
}

double cost(double L, ExtValue dist) { return dist.scaled(L).value(); }

}  // namespace

std::vector<double> upper_envelope(const PartialFunction& f, const DistanceMatrix& d) {
  validate(f, d);
  std::vector<double> out(d.size(), kInf);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      out[x] = std::min(out[x], f.values[i] + cost(f.lipschitz, d(x, f.domain[i])));
  return out;
}

std::vector<double> lower_envelope(const PartialFunction& f, const DistanceMatrix& d) {
  validate(f, d);
  std::vector<double> out(d.size(), -kInf);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      out[x] = std::max(out[x], f.values[i] - cost(f.lipschitz, d(f.domain[i], x)));
  return out;
}

bool is_one_sided_lipschitz(const PartialFunction& f, const DistanceMatrix& d) {
  validate(f, d);
  for (std::size_t i = 0; i < f.domain.size(); ++i)
    for (std::size_t j = 0; j < f.domain.size(); ++j)
      if (f.values[i] - f.values[j] > cost(f.lipschitz, d(f.domain[i], f.domain[j]))) return false;
  return true;
}

AxiomReport lipschitz_check(const std::vector<double>& F, const DistanceMatrix& d, double L, double abs_slack) {
  if (F.size() != d.size()) throw InvalidArgument("lipschitz_check: one value per point");
  const auto& ids = d.points().ids();
  AxiomReport rep;
  rep.checked = {"lipschitz"};
  for (std::size_t x = 0; x < F.size(); ++x)
    for (std::size_t y = 0; y < F.size(); ++y) {
      const double bound = cost(L, d(x, y));
      // inf - inf and -inf - -inf carry no information
      if (std::isinf(F[x]) && F[x] == F[y]) continue;
      const double diff = F[x] - F[y];
      if (diff > bound + abs_slack)
        rep.violations.push_back({"lipschitz", {ids[x], ids[y]}, {L}, ExtValue(std::max(diff, 0.0)), ExtValue(bound)});
    }
  rep.sort();
  return rep;
}

}  // namespace quasimod
