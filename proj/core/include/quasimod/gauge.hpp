#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quasimod/conorm.hpp"
#include "quasimod/ext_value.hpp"
#include "quasimod/point_set.hpp"
#include "quasimod/scale.hpp"

namespace quasimod {

enum class Regime {
  Additive,  // codomain [0, inf], triangle with +
  Conorm     // codomain [0, 1), triangle with a t-conorm
};

/// Largest double strictly below 1; conorm-regime values are clamped here.
inline constexpr double kConormCeiling = 1.0 - 0x1p-52;

/// Scale-indexed gauge w_t(x, y) over a finite point universe.
///
/// A gauge is either closed-form (a kernel evaluated at any t > 0) or
/// tabulated on a ScaleGrid, in which case evaluation at t reads the entry
/// at the smallest grid scale >= t. Gauges are immutable; transforms build
/// new gauges that share the underlying source.
///
/// The symmetric/convex flags are claims made by the constructor. They are
/// never trusted by the checks in axioms.hpp.
class Gauge {
 public:
  using Kernel = std::function<ExtValue(std::size_t x, std::size_t y, double t)>;

  static Gauge closed_form(std::string name, PointSet points, std::optional<TConorm> conorm, Kernel kernel);

  /// Values are row-major over (x, y, k): index (x * n + y) * m + k.
  /// Conorm-regime entries equal to 1 (or infinite) are clamped to
  /// kConormCeiling with a warning; entries above 1 are rejected.
  static Gauge tabulated(PointSet points, ScaleGrid grid, std::optional<TConorm> conorm,
                         std::vector<ExtValue> values);

  Regime regime() const noexcept { return conorm_ ? Regime::Conorm : Regime::Additive; }
  bool is_conorm() const noexcept { return conorm_.has_value(); }
  /// Throws InvalidArgument for additive gauges.
  TConorm conorm() const;

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::string& name() const noexcept { return name_; }

  bool is_tabulated() const noexcept;
  /// Grid of a tabulated gauge; nullptr for closed-form gauges.
  const ScaleGrid* grid() const noexcept;

  /// Unchecked evaluation by index. t must be > 0.
  ExtValue operator()(std::size_t x, std::size_t y, double t) const;
  /// Checked evaluation by point id. Throws UnknownPoint / InvalidArgument.
  ExtValue evaluate(std::string_view x, std::string_view y, double t) const;
  ExtValue evaluate_index(std::size_t x, std::size_t y, double t) const;

  /// w_.(x, y) restricted to a grid.
  Profile profile(std::size_t x, std::size_t y, const ScaleGrid& grid) const;

  /// Sample on a grid. Tabulating a tabulated gauge on its own grid is the identity.
  Gauge tabulate(const ScaleGrid& grid) const;

  /// Copy of a tabulated gauge with one entry replaced.
  Gauge with_entry(std::size_t x, std::size_t y, std::size_t k, ExtValue v) const;

  Gauge with_conorm(TConorm c) const;
  Gauge with_name(std::string name) const;
  Gauge with_claims(bool symmetric, bool convex) const;

  bool claims_symmetric() const noexcept { return claims_symmetric_; }
  bool claims_convex() const noexcept { return claims_convex_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  Gauge with_warning(std::string w) const;

 private:
  struct Table {
    ScaleGrid grid;
    std::vector<ExtValue> values;
  };

  Gauge() = default;

  std::string name_;
  PointSet points_;
  std::optional<TConorm> conorm_;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<const Kernel> kernel_;
  bool claims_symmetric_ = false;
  bool claims_convex_ = false;
  std::vector<std::string> warnings_;
};

}  // namespace quasimod
