#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quasimod/topology.hpp"

namespace quasimod::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  /// Report destination; stdout when empty. A ".csv" suffix selects CSV for
  /// commands that produce a distance matrix.
  std::string output;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  /// Random triangle instances instead of the exhaustive sweep.
  std::optional<std::size_t> sample;
  std::vector<double> grid;
  std::optional<std::string> conorm;
  Side side = Side::Forward;
  std::optional<double> radius;
  std::optional<double> scale;
  std::optional<double> eps;
  std::optional<std::size_t> tail_budget;
  std::optional<std::string> schedule;
  std::optional<double> time;
  double threshold = 1.0;
  double lambda_max = 1e12;
};

const std::vector<std::string>& commands();

/// Runs one command and writes its report. Errors go to `err`.
int run(const RunConfig& config, std::ostream& err);

}  // namespace quasimod::cli
