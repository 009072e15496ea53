#pragma once

#include <string>
#include <string_view>

namespace quasimod {

/// Continuous t-conorm on [0,1] used to aggregate gauge values in the
/// conorm regime.
class TConorm {
 public:
  enum class Kind { Max, ProbabilisticSum, BoundedSum };

  constexpr TConorm() noexcept = default;
  constexpr explicit TConorm(Kind k) noexcept : kind_(k) {}

  static TConorm parse(std::string_view name);  // "max" | "prob_sum" | "bounded_sum"

  constexpr Kind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  /// a (+) b. Monotone in each argument also under floating-point rounding.
  double apply(double a, double b) const noexcept;
  double operator()(double a, double b) const noexcept { return apply(a, b); }

  /// Supremum of the radii r' with r' (+) r' < r.
  double split_bound(double r) const;
  /// Half of split_bound(r): a radius r' with r' (+) r' < r strictly.
  double split_radius(double r) const;

  friend constexpr bool operator==(TConorm a, TConorm b) noexcept { return a.kind_ == b.kind_; }

 private:
  Kind kind_ = Kind::Max;
};

}  // namespace quasimod
