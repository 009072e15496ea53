#include "quasimod/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace quasimod {
namespace {

std::size_t default_tail(std::size_t n, std::size_t min_tail) { return min_tail == 0 ? n / 2 + 1 : min_tail; }

void require_sequence(const Gauge& g, const std::vector<std::size_t>& seq) {
  if (seq.empty()) throw InvalidArgument("sequence must be nonempty");
  for (std::size_t x : seq)
    if (x >= g.size()) throw InvalidArgument("sequence refers to a point outside the gauge");
}

bool in_ball(const Gauge& g, std::size_t c, std::size_t u, double r, double t, Side side) {
  const bool fwd = g(c, u, t).value() < r;
  const bool bwd = g(u, c, t).value() < r;
  switch (side) {
    case Side::Forward: return fwd;
    case Side::Backward: return bwd;
    case Side::TwoSided: return fwd && bwd;
  }
  return false;
}

double split(const Gauge& g, double r) { return g.is_conorm() ? g.conorm().split_radius(r) : r / 4; }

bool split_fits(const Gauge& g, double s, double r) {
  return g.is_conorm() ? g.conorm()(s, s) < r : s + s < r;
}

std::string describe(const PointSet& points, const CoverCell& cell) {
  std::ostringstream os;
  os << "cell of forward centre '" << points.id(cell.forward_center) << "' and backward centre '"
     << points.id(cell.backward_center) << "': '" << points.id(*cell.escapee)
     << "' is outside the two-sided ball of '" << points.id(cell.representative) << "'";
  return os.str();
}

}  // namespace

std::string_view cauchy_kind_name(CauchyKind k) noexcept {
  switch (k) {
    case CauchyKind::Neither: return "neither";
    case CauchyKind::Forward: return "forward";
    case CauchyKind::Backward: return "backward";
    case CauchyKind::Bi: return "bi";
  }
  return "";
}

CauchyResult classify_cauchy(const Gauge& g, const std::vector<std::size_t>& seq, double r, double t,
                             std::size_t min_tail) {
  require_sequence(g, seq);
  const std::size_t n = seq.size();
  const std::size_t tail = default_tail(n, min_tail);
  CauchyResult res;
  // The tail from i0 holds iff no bad pair starts at or after i0, so the
  // minimal start is one past the latest bad left index.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!(g(seq[i], seq[j], t).value() < r)) {
        res.forward_start = i + 2;
        res.forward_witness = std::pair{i + 1, j + 1};
      }
      if (!(g(seq[j], seq[i], t).value() < r)) {
        res.backward_start = i + 2;
        res.backward_witness = std::pair{i + 1, j + 1};
      }
    }
  const bool fwd = res.forward_start <= n && n - res.forward_start + 1 >= tail;
  const bool bwd = res.backward_start <= n && n - res.backward_start + 1 >= tail;
  if (fwd) res.forward_witness.reset();
  if (bwd) res.backward_witness.reset();
  res.kind = fwd && bwd ? CauchyKind::Bi : fwd ? CauchyKind::Forward : bwd ? CauchyKind::Backward : CauchyKind::Neither;
  return res;
}

ConvergenceResult converges_to(const Gauge& g, const std::vector<std::size_t>& seq, std::size_t x, double r,
                               double t, Side side, std::size_t min_tail) {
  require_sequence(g, seq);
  if (x >= g.size()) throw InvalidArgument("limit point outside the gauge");
  const std::size_t n = seq.size();
  ConvergenceResult res;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_ball(g, x, seq[i], r, t, side)) res.last_outside = i + 1;
  res.start = res.last_outside ? *res.last_outside + 1 : 1;
  res.converges = res.start <= n && n - res.start + 1 >= default_tail(n, min_tail);
  return res;
}

bool verify_cover(const Gauge& g, const std::vector<std::size_t>& sample, const CoverResult& cover) {
  return std::all_of(sample.begin(), sample.end(), [&](std::size_t u) {
    return std::any_of(cover.centers.begin(), cover.centers.end(),
                       [&](std::size_t c) { return in_ball(g, c, u, cover.radius, cover.scale, cover.side); });
  });
}

CoverResult greedy_net(const Gauge& g, const std::vector<std::size_t>& sample, double r, double t, Side side) {
  CoverResult cover{{}, r, t, side, false};
  std::vector<bool> covered(sample.size(), false);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (covered[i]) continue;
    const std::size_t c = sample[i];
    cover.centers.push_back(c);
    for (std::size_t j = i; j < sample.size(); ++j)
      if (!covered[j] && in_ball(g, c, sample[j], r, t, side)) covered[j] = true;
    // w(c, c, t) may be nonzero on a gauge that fails W1
    covered[i] = true;
  }
  cover.verified = verify_cover(g, sample, cover);
  return cover;
}

CellInclusionError::CellInclusionError(const PointSet& points, const CoverCell& cell)
    : Error(describe(points, cell)), cell_(cell) {}

std::vector<CoverCell> two_sided_cells(const Gauge& g, const std::vector<std::size_t>& sample,
                                       const CoverResult& forward, const CoverResult& backward, double r, double t) {
  if (forward.side != Side::Forward || backward.side != Side::Backward)
    throw InvalidArgument("two-sided cover needs a forward and a backward cover");
  const double s = forward.radius;
  if (backward.radius != s) throw InvalidArgument("one-sided covers must share the radius s");
  if (forward.scale != t / 2 || backward.scale != t / 2) throw InvalidArgument("one-sided covers must be at scale t/2");
  if (!split_fits(g, s, r)) throw InvalidArgument("radius s must satisfy s (+) s < r");
  if (!verify_cover(g, sample, forward) || !verify_cover(g, sample, backward))
    throw InvalidArgument("one-sided covers do not cover the sample");

  std::vector<CoverCell> cells;
  for (std::size_t xi : forward.centers)
    for (std::size_t yj : backward.centers) {
      CoverCell cell{xi, yj, {}, 0, std::nullopt};
      for (std::size_t u : sample)
        if (in_ball(g, xi, u, s, t / 2, Side::Forward) && in_ball(g, yj, u, s, t / 2, Side::Backward))
          cell.members.push_back(u);
      if (cell.members.empty()) continue;
      cell.representative = cell.members.front();
      for (std::size_t u : cell.members)
        if (!in_ball(g, cell.representative, u, r, t, Side::TwoSided)) {
          cell.escapee = u;
          break;
        }
      cells.push_back(std::move(cell));
    }
  return cells;
}

CoverResult two_sided_cover_from_onesided(const Gauge& g, const std::vector<std::size_t>& sample,
                                          const CoverResult& forward, const CoverResult& backward, double r,
                                          double t) {
  CoverResult cover{{}, r, t, Side::TwoSided, false};
  for (const CoverCell& cell : two_sided_cells(g, sample, forward, backward, r, t)) {
    if (cell.escapee) throw CellInclusionError(g.points(), cell);
    if (std::find(cover.centers.begin(), cover.centers.end(), cell.representative) == cover.centers.end())
      cover.centers.push_back(cell.representative);
  }
  cover.verified = verify_cover(g, sample, cover);
  return cover;
}

TransportResult transport_total_boundedness(const DistanceMatrix& source, const DistanceMatrix& image, double eps,
                                            double delta) {
  if (source.size() != image.size()) throw InvalidArgument("source and image samples must be paired");
  if (!(eps > 0) || !(delta > 0)) throw InvalidArgument("eps and delta must be positive");
  const std::size_t n = source.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (image(a, b).value() < delta && !(source(a, b).value() < eps))
        throw AxiomError("modulus", {source.points().id(a), source.points().id(b)}, {eps, delta},
                         "modulus condition fails: image distance below delta but source distance not below eps");

  TransportResult res;
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    res.image_net.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (image(i, j).value() < delta) covered[j] = true;
    covered[i] = true;
  }
  res.source_net = res.image_net;
  res.verified = true;
  for (std::size_t u = 0; u < n && res.verified; ++u)
    res.verified = std::any_of(res.source_net.begin(), res.source_net.end(),
                               [&](std::size_t c) { return source(c, u).value() < eps; });
  return res;
}

TailResult lp_tail_criterion(const SequenceFamily& fam, double eps, std::optional<std::size_t> tail_budget) {
  if (!(fam.p >= 1)) throw InvalidArgument("exponent p must be at least 1");
  if (!(eps > 0)) throw InvalidArgument("eps must be positive");
  std::size_t len = 0;
  for (const auto& m : fam.members) len = std::max(len, m.size());
  const std::size_t budget = std::min(tail_budget.value_or(len), len);
  const double bound = std::pow(eps, fam.p);

  TailResult res;
  res.coordinate_sup.assign(len, 0.0);
  for (const auto& m : fam.members)
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double v = std::isfinite(m[k]) ? std::abs(m[k]) : std::numeric_limits<double>::infinity();
      res.coordinate_sup[k] = std::max(res.coordinate_sup[k], v);
    }
  res.pointwise_bounded = std::all_of(res.coordinate_sup.begin(), res.coordinate_sup.end(),
                                      [](double v) { return std::isfinite(v); });

  // tails[i][n] = sum_{k >= n} |x_k|^p (0-based k, so k > n in 1-based terms)
  std::vector<std::vector<double>> tails;
  tails.reserve(fam.members.size());
  for (const auto& m : fam.members) {
    std::vector<double> tl(len + 1, 0.0);
    for (std::size_t k = len; k-- > 0;) {
      const double v = k < m.size() ? m[k] : 0.0;
      tl[k] = tl[k + 1] + (std::isfinite(v) ? std::pow(std::abs(v), fam.p) : std::numeric_limits<double>::infinity());
    }
    tails.push_back(std::move(tl));
  }
  for (std::size_t n = 0; n <= budget; ++n)
    if (std::all_of(tails.begin(), tails.end(), [&](const auto& tl) { return tl[n] < bound; })) {
      res.tail_index = n;
      break;
    }
  if (!res.tail_index) {
    for (std::size_t i = 0; i < tails.size(); ++i)
      if (!res.witness_member || tails[i][budget] > res.witness_tail) {
        res.witness_member = i;
        res.witness_tail = tails[i][budget];
      }
  }
  res.verdict = res.pointwise_bounded && res.tail_index.has_value();
  return res;
}

double lp_distance(const std::vector<double>& a, const std::vector<double>& b, double p) {
  const std::size_t len = std::max(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    const double x = k < a.size() ? a[k] : 0.0;
    const double y = k < b.size() ? b[k] : 0.0;
    sum += std::pow(std::abs(x - y), p);
  }
  return std::pow(sum, 1.0 / p);
}

LpNet lp_net(const SequenceFamily& fam, double eps, std::size_t n) {
  LpNet net{{}, 2 * eps, false};
  std::vector<std::vector<double>> heads;
  for (const auto& m : fam.members) heads.emplace_back(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(std::min(n, m.size())));
  std::vector<bool> covered(heads.size(), false);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (covered[i]) continue;
    net.centers.push_back(heads[i]);
    for (std::size_t j = i; j < heads.size(); ++j)
      if (lp_distance(heads[i], heads[j], fam.p) < eps) covered[j] = true;
  }
  net.verified = std::all_of(fam.members.begin(), fam.members.end(), [&](const auto& m) {
    return std::any_of(net.centers.begin(), net.centers.end(),
                       [&](const auto& c) { return lp_distance(m, c, fam.p) < net.radius; });
  });
  return net;
}

AxiomReport heine_borel_report(const Gauge& g, const ScaleGrid& grid) {
  const ThresholdSet th = critical_thresholds(g, grid);
  std::vector<std::size_t> sample(g.size());
  for (std::size_t i = 0; i < sample.size(); ++i) sample[i] = i;
  const auto& ids = g.points().ids();

  AxiomReport rep;
  rep.checked = {"two-sided-cover"};
  std::size_t instances = 0, max_composed = 0, max_direct = 0;
  for (double t : th.scales.scales())
    for (double r : th.radii) {
      const double s = split(g, r);
      const CoverResult fwd = greedy_net(g, sample, s, t / 2, Side::Forward);
      const CoverResult bwd = greedy_net(g, sample, s, t / 2, Side::Backward);
      const CoverResult direct = greedy_net(g, sample, r, t, Side::TwoSided);
      std::size_t reps = 0;
      for (const CoverCell& cell : two_sided_cells(g, sample, fwd, bwd, r, t)) {
        ++reps;
        if (cell.escapee)
          rep.violations.push_back({"two-sided-cover",
                                    {ids[*cell.escapee], ids[cell.representative], ids[cell.forward_center],
                                     ids[cell.backward_center]},
                                    {r, t, s},
                                    max(g(cell.representative, *cell.escapee, t), g(*cell.escapee, cell.representative, t)),
                                    ExtValue(r)});
      }
      ++instances;
      max_composed = std::max(max_composed, reps);
      max_direct = std::max(max_direct, direct.centers.size());
    }
  rep.properties["one-sided-precompact"] = true;
  rep.properties["two-sided-cover-verified"] = rep.ok();
  rep.notes.push_back("thresholds checked: " + std::to_string(instances));
  rep.notes.push_back("largest composed cover: " + std::to_string(max_composed) +
                      ", largest direct two-sided net: " + std::to_string(max_direct));
  rep.sort();
  return rep;
}

}  // namespace quasimod
