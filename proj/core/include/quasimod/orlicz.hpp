#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasimod/gauge.hpp"
#include "quasimod/luxemburg.hpp"
#include "quasimod/point_set.hpp"
#include "quasimod/report.hpp"

namespace quasimod {

/// Finite set of atoms with positive masses; integrals are sums.
struct DiscreteMeasureSpace {
  PointSet points;
  std::vector<double> mu;

  DiscreteMeasureSpace(PointSet points, std::vector<double> mu);
  std::size_t size() const noexcept { return points.size(); }
};

/// Per-atom growth function phi_i(s), s >= 0.
class MusielakOrlicz {
 public:
  enum class Kind { VariableExponent, DoublePhase, Weighted };

  /// phi_i(s) = s^{p_i}, 1 <= p_i < inf.
  static MusielakOrlicz variable_exponent(std::vector<double> p);
  /// phi_i(s) = s^p + a_i s^q, 1 <= p < q < inf, a_i >= 0.
  static MusielakOrlicz double_phase(double p, double q, std::vector<double> a);
  /// phi_i(s) = w_i inner_i(s), w_i > 0.
  static MusielakOrlicz weighted(MusielakOrlicz inner, std::vector<double> w);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t i, double s) const;

  /// Bounds of the growth exponents over all atoms.
  double p_minus() const noexcept { return p_minus_; }
  double p_plus() const noexcept { return p_plus_; }

 private:
  MusielakOrlicz() = default;

  Kind kind_ = Kind::VariableExponent;
  std::size_t size_ = 0;
  std::vector<double> p_;
  double q_ = 0.0;
  std::vector<double> coeff_;
  std::shared_ptr<const MusielakOrlicz> inner_;
  double p_minus_ = 1.0, p_plus_ = 1.0;
};

/// sum_i mu_i phi_i(|f_i|).
ExtValue modular(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi, const std::vector<double>& f);

/// inf{lambda > 0 : modular(f / lambda) <= 1}.
LuxemburgResult luxemburg_norm(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi,
                               const std::vector<double>& f, const LuxemburgOptions& opt = {});

/// The unit-ball relations between norm and modular, within tol:
/// "unit-ball" (norm <= 1 iff modular <= 1), "above-one" (norm >= 1 implies
/// modular >= norm) and "below-one" (norm <= 1 implies modular <= norm).
AxiomReport unit_ball_check(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi,
                            const std::vector<double>& f, double tol = 1e-6, const LuxemburgOptions& opt = {});

struct OneSidedPair {
  MusielakOrlicz psi_plus;
  MusielakOrlicz psi_minus;
};

/// (sum mu psi_plus(f_+), sum mu psi_minus(f_-)).
std::pair<ExtValue, ExtValue> one_sided_modulars(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                                                 const std::vector<double>& f);

struct OneSidedNorms {
  double plus = 0.0;
  double minus = 0.0;
  double sym = 0.0;
};

OneSidedNorms one_sided_gauges(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                               const std::vector<double>& f, const LuxemburgOptions& opt = {});

/// (||f - g||_+, ||f - g||_-).
std::pair<double, double> quasi_metric_from_gauges(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                                                   const std::vector<double>& f, const std::vector<double>& g,
                                                   const LuxemburgOptions& opt = {});

/// min-cap gauge over rho(f, g) = sum mu Phi((f - g)_+) for a family of
/// functions on the space. Phi must be nondecreasing with Phi(0) = 0; rho is
/// validated as a quasi-pseudometric by make_min_cap.
Gauge make_one_sided_orlicz_gauge(const DiscreteMeasureSpace& space, const std::function<double(double)>& Phi,
                                  const std::vector<std::vector<double>>& functions,
                                  std::optional<PointSet> names = std::nullopt);

/// Factors bounding ||f||_{w phi} / ||f||_phi for c <= w <= C and exponents
/// in [p_minus, p_plus].
std::pair<double, double> weight_equivalence_bounds(double c, double C, double p_minus, double p_plus);

}  // namespace quasimod
