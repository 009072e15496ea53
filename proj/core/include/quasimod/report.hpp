#pragma once

#include <map>
#include <string>
#include <vector>

#include "quasimod/ext_value.hpp"

namespace quasimod {

/// One failed axiom instance. `params` holds the scales and radii of the
/// instance in the order documented by the check that produced it.
struct Violation {
  std::string axiom;
  std::vector<std::string> points;
  std::vector<double> params;
  ExtValue lhs;
  ExtValue rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

bool operator<(const Violation& a, const Violation& b);

struct AxiomReport {
  std::vector<std::string> checked;
  std::vector<Violation> violations;
  /// Informational findings that are not axioms (symmetry, separation, ...).
  std::map<std::string, bool> properties;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
  bool has_violation(const std::string& axiom) const;
  std::size_t count(const std::string& axiom) const;

  /// Lexicographic witness order with duplicates removed; makes reports
  /// independent of sweep order.
  void sort();
  void merge(AxiomReport other);
};

}  // namespace quasimod
