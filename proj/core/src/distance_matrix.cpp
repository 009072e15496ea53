#include "quasimod/distance_matrix.hpp"

#include "quasimod/error.hpp"

namespace quasimod {

DistanceMatrix::DistanceMatrix(PointSet points)
    : points_(std::move(points)), data_(points_.size() * points_.size()) {}

DistanceMatrix::DistanceMatrix(PointSet points, std::vector<ExtValue> row_major)
    : points_(std::move(points)), data_(std::move(row_major)) {
  if (data_.size() != points_.size() * points_.size())
    throw InvalidArgument("distance matrix size does not match point count");
}

DistanceMatrix DistanceMatrix::transposed() const {
  DistanceMatrix out(points_);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) out(y, x) = (*this)(x, y);
  return out;
}

bool DistanceMatrix::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

}  // namespace quasimod
