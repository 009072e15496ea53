#pragma once

#include <compare>
#include <iosfwd>
#include <limits>

namespace quasimod {

/// Nonnegative extended real: a finite value >= 0 or +infinity.
///
/// Construction rejects negative values and NaN, so every ExtValue in the
/// program is a valid element of [0, inf]. Addition absorbs infinity and
/// scaling uses the measure-theoretic convention 0 * inf = 0.
class ExtValue {
 public:
  constexpr ExtValue() noexcept = default;
  explicit ExtValue(double v);

  static constexpr ExtValue zero() noexcept { return ExtValue{}; }
  static ExtValue infinity() noexcept;

  constexpr double value() const noexcept { return v_; }
  bool is_infinite() const noexcept { return v_ == std::numeric_limits<double>::infinity(); }
  bool is_finite() const noexcept { return !is_infinite(); }
  bool is_zero() const noexcept { return v_ == 0.0; }

  /// factor * this, with 0 * inf = 0. factor must be >= 0.
  ExtValue scaled(double factor) const;

  friend ExtValue operator+(ExtValue a, ExtValue b) noexcept;
  ExtValue& operator+=(ExtValue other) noexcept;

  friend constexpr bool operator==(ExtValue a, ExtValue b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(ExtValue a, ExtValue b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  struct Unchecked {};
  constexpr ExtValue(double v, Unchecked) noexcept : v_(v) {}

  double v_ = 0.0;
};

ExtValue min(ExtValue a, ExtValue b) noexcept;
ExtValue max(ExtValue a, ExtValue b) noexcept;

std::ostream& operator<<(std::ostream& os, ExtValue v);

}  // namespace quasimod
