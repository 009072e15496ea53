#include "quasimod/ext_value.hpp"

#include <cmath>
#include <ostream>

#include "quasimod/error.hpp"

namespace quasimod {

NonMonotoneError::NonMonotoneError(double lo_scale, double lo_value, double hi_scale, double hi_value)
    : Error("scale function increases between lambda=" + std::to_string(lo_scale) + " (value " +
            std::to_string(lo_value) + ") and lambda=" + std::to_string(hi_scale) + " (value " +
            std::to_string(hi_value) + ")"),
      lo_scale_(lo_scale),
      lo_value_(lo_value),
      hi_scale_(hi_scale),
      hi_value_(hi_value) {}

ExtValue::ExtValue(double v) : v_(v) {
  if (std::isnan(v)) throw InvalidArgument("extended value is NaN");
  if (v < 0.0) throw InvalidArgument("extended value is negative: " + std::to_string(v));
}

ExtValue ExtValue::infinity() noexcept {
  return ExtValue(std::numeric_limits<double>::infinity(), Unchecked{});
}

ExtValue ExtValue::scaled(double factor) const {
  if (std::isnan(factor) || factor < 0.0) throw InvalidArgument("negative or NaN scale factor");
  if (factor == 0.0 || v_ == 0.0) return ExtValue{};
  return ExtValue(factor * v_, Unchecked{});
}

ExtValue operator+(ExtValue a, ExtValue b) noexcept { return ExtValue(a.v_ + b.v_, ExtValue::Unchecked{}); }

ExtValue& ExtValue::operator+=(ExtValue other) noexcept {
  v_ += other.v_;
  return *this;
}

ExtValue min(ExtValue a, ExtValue b) noexcept { return b < a ? b : a; }
ExtValue max(ExtValue a, ExtValue b) noexcept { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, ExtValue v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

}  // namespace quasimod
