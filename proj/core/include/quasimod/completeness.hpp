#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasimod/distance_matrix.hpp"
#include "quasimod/error.hpp"
#include "quasimod/gauge.hpp"
#include "quasimod/report.hpp"
#include "quasimod/scale.hpp"
#include "quasimod/topology.hpp"

namespace quasimod {

// Sequences and samples are lists of point indices into the gauge's point set.
// Sequence positions in results are 1-based.

enum class CauchyKind { Neither, Forward, Backward, Bi };
std::string_view cauchy_kind_name(CauchyKind k) noexcept;

struct CauchyResult {
  CauchyKind kind = CauchyKind::Neither;
  /// Minimal start index for which the tail condition holds, per direction.
  std::size_t forward_start = 1;
  std::size_t backward_start = 1;
  /// Latest offending pair (i, j), i <= j, when a direction fails.
  std::optional<std::pair<std::size_t, std::size_t>> forward_witness;
  std::optional<std::pair<std::size_t, std::size_t>> backward_witness;
};

/// Finite-horizon Cauchy test. Forward: w(x_i, x_j, t) < r for all
/// start <= i <= j <= N; backward: w(x_j, x_i, t) < r. Any finite sequence
/// satisfies this with start = N, so a direction only counts when its tail
/// N - start + 1 is at least min_tail (0 selects floor(N/2) + 1).
CauchyResult classify_cauchy(const Gauge& g, const std::vector<std::size_t>& seq, double r, double t,
                             std::size_t min_tail = 0);

struct ConvergenceResult {
  bool converges = false;
  std::size_t start = 1;
  /// Last position outside the ball, if any.
  std::optional<std::size_t> last_outside;
};

/// x_i in B^side(x; r, t) for every i >= start, with the same tail rule.
ConvergenceResult converges_to(const Gauge& g, const std::vector<std::size_t>& seq, std::size_t x, double r,
                               double t, Side side, std::size_t min_tail = 0);

struct CoverResult {
  std::vector<std::size_t> centers;
  double radius = 0.0;
  double scale = 0.0;
  Side side = Side::Forward;
  bool verified = false;
};

/// Every sample point lies in B^side(c; r, t) for some centre c.
bool verify_cover(const Gauge& g, const std::vector<std::size_t>& sample, const CoverResult& cover);

/// First-uncovered greedy net in input order.
CoverResult greedy_net(const Gauge& g, const std::vector<std::size_t>& sample, double r, double t, Side side);

/// One cell B+(x_i; s, t/2) n B-(y_j; s, t/2) of the two-sided construction.
struct CoverCell {
  std::size_t forward_center;
  std::size_t backward_center;
  std::vector<std::size_t> members;
  std::size_t representative;
  /// Member outside B(representative; r, t), if any.
  std::optional<std::size_t> escapee;
};

class CellInclusionError : public Error {
 public:
  CellInclusionError(const PointSet& points, const CoverCell& cell);
  const CoverCell& cell() const noexcept { return cell_; }

 private:
  CoverCell cell_;
};

/// Nonempty cells of a forward and a backward cover at (s, t/2) with s (+) s < r.
/// Throws InvalidArgument if the covers or s do not fit that shape.
std::vector<CoverCell> two_sided_cells(const Gauge& g, const std::vector<std::size_t>& sample,
                                       const CoverResult& forward, const CoverResult& backward, double r, double t);

/// Cell representatives as a two-sided cover at (r, t). Throws
/// CellInclusionError on the first cell that is not inside its
/// representative's two-sided ball.
CoverResult two_sided_cover_from_onesided(const Gauge& g, const std::vector<std::size_t>& sample,
                                          const CoverResult& forward, const CoverResult& backward, double r,
                                          double t);

struct TransportResult {
  bool verified = false;
  std::vector<std::size_t> image_net;
  std::vector<std::size_t> source_net;
};

/// Point k of the source maps to point k of the image. Requires
/// d_image(a, b) < delta => d_source(a, b) < eps on every pair (AxiomError
/// "modulus" with the pair otherwise), then pulls a greedy delta-net of the
/// image back to an eps-net of the source.
TransportResult transport_total_boundedness(const DistanceMatrix& source, const DistanceMatrix& image, double eps,
                                            double delta);

struct SequenceFamily {
  double p = 2.0;
  std::vector<std::vector<double>> members;
};

struct TailResult {
  bool pointwise_bounded = false;
  std::vector<double> coordinate_sup;
  std::optional<std::size_t> tail_index;
  bool verdict = false;
  /// When no tail index fits the budget: member with the largest tail at the budget.
  std::optional<std::size_t> witness_member;
  double witness_tail = 0.0;
};

/// Least n <= tail_budget with sum_{k > n} |x_k|^p < eps^p for every member.
/// Every finite family passes at n = L, so the budget (default L) is what
/// makes a negative verdict possible. Non-finite entries are unbounded.
TailResult lp_tail_criterion(const SequenceFamily& fam, double eps, std::optional<std::size_t> tail_budget = {});

double lp_distance(const std::vector<double>& a, const std::vector<double>& b, double p);

struct LpNet {
  std::vector<std::vector<double>> centers;
  double radius = 0.0;
  bool verified = false;
};

/// Net of truncations to the first n coordinates, greedy at radius eps; every
/// member is then within 2^{1/p} eps <= 2 eps of a centre. Verified directly.
LpNet lp_net(const SequenceFamily& fam, double eps, std::size_t n);

/// For every critical threshold (r, t): one-sided nets at (split(r), t/2),
/// the composed two-sided cover, and a direct two-sided net. Failed cell
/// inclusions are "two-sided-cover" violations with points
/// (escapee, representative, forward centre, backward centre) and params
/// (r, t, s).
AxiomReport heine_borel_report(const Gauge& g, const ScaleGrid& grid);

}  // namespace quasimod
