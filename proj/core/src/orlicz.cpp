#include "quasimod/orlicz.hpp"

#include <algorithm>
#include <cmath>

#include "quasimod/builders.hpp"
#include "quasimod/error.hpp"

namespace quasimod {
namespace {

void require_function(const DiscreteMeasureSpace& space, const std::vector<double>& f) {
  if (f.size() != space.size()) throw InvalidArgument("function needs one value per atom");
  for (double v : f)
    if (!std::isfinite(v)) throw InvalidArgument("function values must be finite");
}

void require_phi(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi) {
  if (phi.size() != space.size()) throw InvalidArgument("growth function needs one entry per atom");
}

ExtValue sum_parts(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi, const std::vector<double>& f,
                   int sign) {
  ExtValue sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double part = std::max(sign * f[i], 0.0);
    if (part > 0) sum += ExtValue(phi(i, part)).scaled(space.mu[i]);
  }
  return sum;
}

double norm_of(const std::function<ExtValue(const std::vector<double>&)>& rho, const std::vector<double>& f,
               const LuxemburgOptions& opt) {
  std::vector<double> scaled(f.size());
  return luxemburg_infimum(
             [&](double lambda) {
               for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = f[i] / lambda;
               return rho(scaled);
             },
             opt)
      .value.value();
}

}  // namespace

DiscreteMeasureSpace::DiscreteMeasureSpace(PointSet pts, std::vector<double> masses)
    : points(std::move(pts)), mu(std::move(masses)) {
  if (mu.size() != points.size()) throw InvalidArgument("measure needs one mass per atom");
  for (double m : mu)
    if (!(m > 0) || !std::isfinite(m)) throw InvalidArgument("masses must be positive and finite");
}

MusielakOrlicz MusielakOrlicz::variable_exponent(std::vector<double> p) {
  if (p.empty()) throw InvalidArgument("variable exponent needs at least one atom");
  for (double v : p)
    if (!(v >= 1) || !std::isfinite(v)) throw InvalidArgument("exponents must satisfy 1 <= p < inf");
  MusielakOrlicz m;
  m.kind_ = Kind::VariableExponent;
  m.size_ = p.size();
  m.p_minus_ = *std::min_element(p.begin(), p.end());
  m.p_plus_ = *std::max_element(p.begin(), p.end());
  m.p_ = std::move(p);
  return m;
}

MusielakOrlicz MusielakOrlicz::double_phase(double p, double q, std::vector<double> a) {
  if (!(p >= 1) || !(q > p) || !std::isfinite(q)) throw InvalidArgument("double phase needs 1 <= p < q < inf");
  if (a.empty()) throw InvalidArgument("double phase needs at least one atom");
  for (double v : a)
    if (!(v >= 0) || !std::isfinite(v)) throw InvalidArgument("double-phase weights must be finite and >= 0");
  MusielakOrlicz m;
  m.kind_ = Kind::DoublePhase;
  m.size_ = a.size();
  m.p_ = {p};
  m.q_ = q;
  m.p_minus_ = p;
  m.p_plus_ = std::any_of(a.begin(), a.end(), [](double v) { return v > 0; }) ? q : p;
  m.coeff_ = std::move(a);
  return m;
}

MusielakOrlicz MusielakOrlicz::weighted(MusielakOrlicz inner, std::vector<double> w) {
  if (w.size() != inner.size()) throw InvalidArgument("weight needs one entry per atom");
  for (double v : w)
    if (!(v > 0) || !std::isfinite(v)) throw InvalidArgument("weights must be positive and finite");
  MusielakOrlicz m;
  m.kind_ = Kind::Weighted;
  m.size_ = inner.size();
  m.p_minus_ = inner.p_minus();
  m.p_plus_ = inner.p_plus();
  m.coeff_ = std::move(w);
  m.inner_ = std::make_shared<const MusielakOrlicz>(std::move(inner));
  return m;
}

double MusielakOrlicz::operator()(std::size_t i, double s) const {
  if (s == 0) return 0.0;
  switch (kind_) {
    case Kind::VariableExponent: return std::pow(s, p_[i]);
    case Kind::DoublePhase: {
      const double base = std::pow(s, p_[0]);
      return coeff_[i] == 0.0 ? base : base + coeff_[i] * std::pow(s, q_);
    }
    case Kind::Weighted: return coeff_[i] * (*inner_)(i, s);
  }
  return 0.0;
}

ExtValue modular(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi, const std::vector<double>& f) {
  require_phi(space, phi);
  require_function(space, f);
  ExtValue sum;
  for (std::size_t i = 0; i < f.size(); ++i) sum += ExtValue(phi(i, std::abs(f[i]))).scaled(space.mu[i]);
  return sum;
}

LuxemburgResult luxemburg_norm(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi,
                               const std::vector<double>& f, const LuxemburgOptions& opt) {
  require_phi(space, phi);
  require_function(space, f);
  std::vector<double> scaled(f.size());
  return luxemburg_infimum(
      [&](double lambda) {
        for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = f[i] / lambda;
        return modular(space, phi, scaled);
      },
      opt);
}

AxiomReport unit_ball_check(const DiscreteMeasureSpace& space, const MusielakOrlicz& phi,
                            const std::vector<double>& f, double tol, const LuxemburgOptions& opt) {
  const ExtValue norm = luxemburg_norm(space, phi, f, opt).value;
  const ExtValue rho = modular(space, phi, f);
  const double n = norm.value(), r = rho.value();
  const auto& ids = space.points.ids();
  AxiomReport rep;
  rep.checked = {"above-one", "below-one", "unit-ball"};
  // Near the threshold both sides of the equivalence are within tol of 1.
  const bool norm_in = n <= 1 + tol, rho_in = r <= 1 + tol;
  const bool norm_out = n >= 1 - tol, rho_out = r >= 1 - tol;
  if ((n <= 1 && !rho_in) || (r <= 1 && !norm_in) || (n > 1 && !rho_out) || (r > 1 && !norm_out))
    rep.violations.push_back({"unit-ball", ids, {tol}, norm, rho});
  if (n >= 1 && r < n - tol) rep.violations.push_back({"above-one", ids, {tol}, norm, rho});
  if (n <= 1 && r > n + tol) rep.violations.push_back({"below-one", ids, {tol}, rho, norm});
  rep.sort();
  return rep;
}

std::pair<ExtValue, ExtValue> one_sided_modulars(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                                                 const std::vector<double>& f) {
  require_phi(space, pair.psi_plus);
  require_phi(space, pair.psi_minus);
  require_function(space, f);
  return {sum_parts(space, pair.psi_plus, f, 1), sum_parts(space, pair.psi_minus, f, -1)};
}

OneSidedNorms one_sided_gauges(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                               const std::vector<double>& f, const LuxemburgOptions& opt) {
  require_phi(space, pair.psi_plus);
  require_phi(space, pair.psi_minus);
  require_function(space, f);
  OneSidedNorms out;
  out.plus = norm_of([&](const auto& h) { return sum_parts(space, pair.psi_plus, h, 1); }, f, opt);
  out.minus = norm_of([&](const auto& h) { return sum_parts(space, pair.psi_minus, h, -1); }, f, opt);
  out.sym = std::max(out.plus, out.minus);
  return out;
}

std::pair<double, double> quasi_metric_from_gauges(const DiscreteMeasureSpace& space, const OneSidedPair& pair,
                                                   const std::vector<double>& f, const std::vector<double>& g,
                                                   const LuxemburgOptions& opt) {
  require_function(space, f);
  require_function(space, g);
  std::vector<double> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i] - g[i];
  const OneSidedNorms n = one_sided_gauges(space, pair, diff, opt);
  return {n.plus, n.minus};
}

Gauge make_one_sided_orlicz_gauge(const DiscreteMeasureSpace& space, const std::function<double(double)>& Phi,
                                  const std::vector<std::vector<double>>& functions, std::optional<PointSet> names) {
  if (Phi(0.0) != 0.0) throw InvalidArgument("Phi(0) must be 0");
  for (const auto& f : functions) require_function(space, f);
  PointSet pts = names ? std::move(*names) : PointSet::numbered(functions.size(), "f");
  if (pts.size() != functions.size()) throw InvalidArgument("need one name per function");
  DistanceMatrix rho(pts);
  for (std::size_t a = 0; a < functions.size(); ++a)
    for (std::size_t b = 0; b < functions.size(); ++b) {
      ExtValue sum;
      for (std::size_t i = 0; i < space.size(); ++i) {
        const double part = std::max(functions[a][i] - functions[b][i], 0.0);
        if (part > 0) sum += ExtValue(Phi(part)).scaled(space.mu[i]);
      }
      rho(a, b) = sum;
    }
  return make_min_cap(rho).with_name("one_sided_orlicz");
}

std::pair<double, double> weight_equivalence_bounds(double c, double C, double p_minus, double p_plus) {
  if (!(c > 0) || !(C >= c)) throw InvalidArgument("weight bounds need 0 < c <= C");
  if (!(p_minus >= 1) || !(p_plus >= p_minus)) throw InvalidArgument("exponent bounds need 1 <= p- <= p+");
  const double lower = c <= 1 ? std::pow(c, 1 / p_minus) : std::pow(c, 1 / p_plus);
  const double upper = C >= 1 ? std::pow(C, 1 / p_minus) : std::pow(C, 1 / p_plus);
  return {lower, upper};
}

}  // namespace quasimod
