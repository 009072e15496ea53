#include "quasimod/luxemburg.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "quasimod/error.hpp"

namespace quasimod {
namespace {

constexpr double kMonotoneSlack = 1e-12;

// Records every probe and rejects a level that increases with lambda.
class Prober {
 public:
  Prober(const std::function<ExtValue(double)>& level, double threshold) : level_(level), c_(threshold) {}

  bool holds(double lambda) {
    const ExtValue v = level_(lambda);
    ++count_;
    auto [it, inserted] = seen_.emplace(lambda, v);
    if (!inserted) return v.value() <= c_;
    if (it != seen_.begin()) {
      auto lo = std::prev(it);
      if (increases(lo->second, v)) throw NonMonotoneError(lo->first, lo->second.value(), lambda, v.value());
    }
    if (auto hi = std::next(it); hi != seen_.end()) {
      if (increases(v, hi->second)) throw NonMonotoneError(lambda, v.value(), hi->first, hi->second.value());
    }
    return v.value() <= c_;
  }

  int count() const noexcept { return count_; }

 private:
  static bool increases(ExtValue lo, ExtValue hi) {
    if (!(hi > lo)) return false;
    if (hi.is_infinite()) return true;
    return hi.value() - lo.value() > kMonotoneSlack * hi.value();
  }

  const std::function<ExtValue(double)>& level_;
  double c_;
  std::map<double, ExtValue> seen_;
  int count_ = 0;
};

}  // namespace

LuxemburgResult luxemburg_infimum(const std::function<ExtValue(double)>& level, const LuxemburgOptions& opt) {
  if (!(opt.threshold > 0) || !(opt.tol > 0) || !(opt.lambda_max > opt.tol) || !std::isfinite(opt.lambda_max))
    throw InvalidArgument("luxemburg: need threshold > 0 and 0 < tol < lambda_max < inf");

  Prober probe(level, opt.threshold);
  LuxemburgResult res;
  const bool at_max = probe.holds(opt.lambda_max);
  const bool at_tol = probe.holds(opt.tol);

  if (at_tol) {
    constexpr double tiny = std::numeric_limits<double>::min();
    if (probe.holds(tiny)) {
      res.value = ExtValue::zero();
      res.upper = tiny;
    } else {
      double lo = tiny, hi = opt.tol;
      while (hi - lo > opt.tol * hi) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (mid <= lo || mid >= hi) break;
        (probe.holds(mid) ? hi : lo) = mid;
      }
      res.value = ExtValue(hi);
      res.lower = lo;
      res.upper = hi;
    }
    res.iterations = probe.count();
    return res;
  }

  if (!at_max) {
    res.value = ExtValue::infinity();
    res.lower = opt.lambda_max;
    res.upper = std::numeric_limits<double>::infinity();
    res.iterations = probe.count();
    return res;
  }

  double lo = opt.tol, hi = 2 * opt.tol;
  while (hi < opt.lambda_max && !probe.holds(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (hi >= opt.lambda_max) hi = opt.lambda_max;
  while (hi - lo > opt.tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (probe.holds(mid) ? hi : lo) = mid;
  }
  res.value = ExtValue(hi);
  res.lower = lo;
  res.upper = hi;
  res.iterations = probe.count();
  return res;
}

LuxemburgResult luxemburg_distance(const Gauge& g, std::size_t x, std::size_t y, const LuxemburgOptions& opt) {
  if (g.is_conorm()) throw InvalidArgument("luxemburg_distance expects an additive-regime gauge");
  if (x >= g.size() || y >= g.size()) throw InvalidArgument("luxemburg_distance: point index out of range");
  return luxemburg_infimum([&](double lambda) { return g(x, y, lambda); }, opt);
}

ExtValue symmetrized_luxemburg(const Gauge& g, std::size_t x, std::size_t y, const LuxemburgOptions& opt) {
  return max(luxemburg_distance(g, x, y, opt).value, luxemburg_distance(g, y, x, opt).value);
}

DistanceMatrix luxemburg_matrix(const Gauge& g, const LuxemburgOptions& opt) {
  DistanceMatrix d(g.points());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) d(x, y) = luxemburg_distance(g, x, y, opt).value;
  return d;
}

AxiomReport quasi_pseudometric_check(const DistanceMatrix& d, double abs_slack) {
  const auto& ids = d.points().ids();
  const std::size_t n = d.size();
  AxiomReport rep;
  rep.checked = {"reflexive-zero", "triangle"};
  for (std::size_t x = 0; x < n; ++x)
    if (!d(x, x).is_zero()) rep.violations.push_back({"reflexive-zero", {ids[x]}, {}, d(x, x), ExtValue{}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const ExtValue lhs = d(x, z);
        const ExtValue rhs = d(x, y) + d(y, z);
        if (lhs.is_finite() ? lhs.value() > rhs.value() + abs_slack : rhs.is_finite())
          rep.violations.push_back({"triangle", {ids[x], ids[y], ids[z]}, {}, lhs, rhs});
      }
  rep.properties["symmetric"] = d.is_symmetric();
  rep.sort();
  return rep;
}

}  // namespace quasimod
