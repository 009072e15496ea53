#include "quasimod/report.hpp"

#include <algorithm>
#include <tuple>

namespace quasimod {

bool operator<(const Violation& a, const Violation& b) {
  return std::tie(a.axiom, a.points, a.params) < std::tie(b.axiom, b.points, b.params);
}

bool AxiomReport::has_violation(const std::string& axiom) const { return count(axiom) > 0; }

std::size_t AxiomReport::count(const std::string& axiom) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

void AxiomReport::sort() {
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  std::sort(checked.begin(), checked.end());
  checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
}

void AxiomReport::merge(AxiomReport other) {
  checked.insert(checked.end(), other.checked.begin(), other.checked.end());
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  for (auto& [k, v] : other.properties) properties[k] = v;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  sort();
}

}  // namespace quasimod
