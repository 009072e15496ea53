#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quasimod {

/// Finite ordered universe of named points. Indices are stable and follow
/// the construction order; ids must be unique.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> ids);

  /// Points named prefix0, prefix1, ...
  static PointSet numbered(std::size_t n, std::string_view prefix = "p");

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::size_t index_of(std::string_view id) const;  // throws UnknownPoint
  bool contains(std::string_view id) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace quasimod
