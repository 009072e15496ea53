#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "quasimod/ext_value.hpp"

namespace quasimod {

/// Strictly increasing finite list of positive scales t_1 < ... < t_m.
class ScaleGrid {
 public:
  explicit ScaleGrid(std::vector<double> scales);
  ScaleGrid(std::initializer_list<double> scales) : ScaleGrid(std::vector<double>(scales)) {}

  std::size_t size() const noexcept { return scales_.size(); }
  double operator[](std::size_t i) const { return scales_[i]; }
  double front() const noexcept { return scales_.front(); }
  double back() const noexcept { return scales_.back(); }
  const std::vector<double>& scales() const noexcept { return scales_; }

  /// Index of the smallest grid scale >= t, or the last index when t lies
  /// beyond the grid. This is the piecewise-constant reading of a profile.
  std::size_t ceil_index(double t) const;
  double project(double t) const { return scales_[ceil_index(t)]; }

  friend bool operator==(const ScaleGrid&, const ScaleGrid&) = default;

 private:
  std::vector<double> scales_;
};

/// Scale function sampled on a grid. Evaluation at an arbitrary t > 0 uses
/// the entry at the smallest grid scale >= t (last entry beyond the grid).
class Profile {
 public:
  Profile(ScaleGrid grid, std::vector<ExtValue> values);

  const ScaleGrid& grid() const noexcept { return grid_; }
  const std::vector<ExtValue>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  ExtValue operator[](std::size_t i) const { return values_[i]; }

  ExtValue at(double t) const;

  /// First grid pair (i, i+1) where the profile increases, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_increase() const;
  bool is_nonincreasing() const { return !first_increase(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  ScaleGrid grid_;
  std::vector<ExtValue> values_;
};

std::ostream& operator<<(std::ostream& os, const Profile& p);

/// Smallest nonincreasing majorant: value at t_i becomes the supremum over
/// scales >= t_i. The identity on nonincreasing profiles.
Profile right_regularize(const Profile& p);

}  // namespace quasimod
