#pragma once

#include <cstddef>
#include <vector>

#include "quasimod/ext_value.hpp"
#include "quasimod/point_set.hpp"

namespace quasimod {

/// Dense table of extended values indexed by ordered point pairs. Used for
/// quasi-pseudometrics, metrics and computed distance matrices.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(PointSet points);
  DistanceMatrix(PointSet points, std::vector<ExtValue> row_major);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  ExtValue operator()(std::size_t x, std::size_t y) const { return data_[x * size() + y]; }
  ExtValue& operator()(std::size_t x, std::size_t y) { return data_[x * size() + y]; }
  const std::vector<ExtValue>& data() const noexcept { return data_; }

  DistanceMatrix transposed() const;
  bool is_symmetric() const;

 private:
  PointSet points_;
  std::vector<ExtValue> data_;
};

}  // namespace quasimod
