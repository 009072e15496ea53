#include "quasimod/scale.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "quasimod/error.hpp"

namespace quasimod {

ScaleGrid::ScaleGrid(std::vector<double> scales) : scales_(std::move(scales)) {
  if (scales_.empty()) throw InvalidArgument("scale grid is empty");
  for (std::size_t i = 0; i < scales_.size(); ++i) {
    if (!std::isfinite(scales_[i]) || scales_[i] <= 0.0)
      throw InvalidArgument("scale grid entries must be finite and positive");
    if (i > 0 && !(scales_[i - 1] < scales_[i]))
      throw InvalidArgument("scale grid must be strictly increasing");
  }
}

std::size_t ScaleGrid::ceil_index(double t) const {
  auto it = std::lower_bound(scales_.begin(), scales_.end(), t);
  if (it == scales_.end()) return scales_.size() - 1;
  return static_cast<std::size_t>(it - scales_.begin());
}

Profile::Profile(ScaleGrid grid, std::vector<ExtValue> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw InvalidArgument("profile needs one value per grid scale");
}

ExtValue Profile::at(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("profile evaluated at nonpositive scale");
  return values_[grid_.ceil_index(t)];
}

std::optional<std::pair<std::size_t, std::size_t>> Profile::first_increase() const {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i + 1] > values_[i]) return std::pair{i, i + 1};
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Profile& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p.grid()[i] << ':' << p[i];
  return os << ']';
}

Profile right_regularize(const Profile& p) {
  std::vector<ExtValue> out(p.values());
  for (std::size_t i = out.size(); i-- > 1;) out[i - 1] = max(out[i - 1], out[i]);
  return Profile(p.grid(), std::move(out));
}

}  // namespace quasimod
