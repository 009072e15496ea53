#include "quasimod/point_set.hpp"

#include "quasimod/error.hpp"

namespace quasimod {

PointSet::PointSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) throw InvalidArgument("duplicate point id '" + ids_[i] + "'");
  }
}

PointSet PointSet::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::string(prefix) + std::to_string(i));
  return PointSet(std::move(ids));
}

std::size_t PointSet::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw UnknownPoint(std::string(id));
  return it->second;
}

bool PointSet::contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

}  // namespace quasimod
