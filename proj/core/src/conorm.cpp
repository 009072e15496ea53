#include "quasimod/conorm.hpp"

#include <algorithm>
#include <cmath>

#include "quasimod/error.hpp"

namespace quasimod {

TConorm TConorm::parse(std::string_view name) {
  if (name == "max") return TConorm(Kind::Max);
  if (name == "prob_sum") return TConorm(Kind::ProbabilisticSum);
  if (name == "bounded_sum") return TConorm(Kind::BoundedSum);
  throw InvalidArgument("unknown t-conorm '" + std::string(name) + "'");
}

std::string_view TConorm::name() const noexcept {
  switch (kind_) {
    case Kind::Max: return "max";
    case Kind::ProbabilisticSum: return "prob_sum";
    case Kind::BoundedSum: return "bounded_sum";
  }
  return "max";
}

double TConorm::apply(double a, double b) const noexcept {
  switch (kind_) {
    case Kind::Max: return std::max(a, b);
    // hi + lo(1-hi) on the ordered pair: exactly commutative, and each
    // rounding step is monotone in lo.
    case Kind::ProbabilisticSum: {
      const double hi = std::max(a, b), lo = std::min(a, b);
      return hi + lo * (1.0 - hi);
    }
    case Kind::BoundedSum: return std::min(1.0, a + b);
  }
  return std::max(a, b);
}

double TConorm::split_bound(double r) const {
  if (!(r > 0.0)) throw InvalidArgument("split radius requires r > 0");
  switch (kind_) {
    case Kind::Max: return r;
    // 2s - s^2 < r  <=>  s < 1 - sqrt(1 - r)
    case Kind::ProbabilisticSum: return r >= 1.0 ? 1.0 : 1.0 - std::sqrt(1.0 - r);
    case Kind::BoundedSum: return r / 2.0;
  }
  return r;
}

double TConorm::split_radius(double r) const { return split_bound(r) / 2.0; }

}  // namespace quasimod
