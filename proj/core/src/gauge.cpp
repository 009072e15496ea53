#include "quasimod/gauge.hpp"

#include <cmath>

#include "quasimod/error.hpp"

namespace quasimod {

Gauge Gauge::closed_form(std::string name, PointSet points, std::optional<TConorm> conorm, Kernel kernel) {
  if (!kernel) throw InvalidArgument("closed-form gauge needs a kernel");
  Gauge g;
  g.name_ = std::move(name);
  g.points_ = std::move(points);
  g.conorm_ = conorm;
  g.kernel_ = std::make_shared<const Kernel>(std::move(kernel));
  return g;
}

Gauge Gauge::tabulated(PointSet points, ScaleGrid grid, std::optional<TConorm> conorm, std::vector<ExtValue> values) {
  const std::size_t n = points.size();
  if (values.size() != n * n * grid.size())
    throw InvalidArgument("tabulated gauge needs an entry for every (x, y, t) triple");
  Gauge g;
  g.name_ = "tabulated";
  if (conorm) {
    std::size_t clamped = 0;
    for (auto& v : values) {
      if (v.value() > 1.0 && v.is_finite()) throw InvalidArgument("conorm-regime gauge value exceeds 1");
      if (v.value() >= 1.0) {
        v = ExtValue(kConormCeiling);
        ++clamped;
      }
    }
    if (clamped > 0)
      g.warnings_.push_back(std::to_string(clamped) + " conorm value(s) equal to 1 clamped below 1");
  }
  g.points_ = std::move(points);
  g.conorm_ = conorm;
  g.table_ = std::make_shared<const Table>(Table{std::move(grid), std::move(values)});
  return g;
}

TConorm Gauge::conorm() const {
  if (!conorm_) throw InvalidArgument("gauge '" + name_ + "' is in the additive regime");
  return *conorm_;
}

bool Gauge::is_tabulated() const noexcept { return table_ != nullptr; }

const ScaleGrid* Gauge::grid() const noexcept { return table_ ? &table_->grid : nullptr; }

ExtValue Gauge::operator()(std::size_t x, std::size_t y, double t) const {
  if (table_) {
    const std::size_t m = table_->grid.size();
    return table_->values[(x * size() + y) * m + table_->grid.ceil_index(t)];
  }
  return (*kernel_)(x, y, t);
}

ExtValue Gauge::evaluate_index(std::size_t x, std::size_t y, double t) const {
  if (x >= size() || y >= size()) throw InvalidArgument("point index out of range");
  if (!(t > 0.0) || std::isnan(t)) throw InvalidArgument("gauge evaluated at nonpositive scale");
  return (*this)(x, y, t);
}

ExtValue Gauge::evaluate(std::string_view x, std::string_view y, double t) const {
  return evaluate_index(points_.index_of(x), points_.index_of(y), t);
}

Profile Gauge::profile(std::size_t x, std::size_t y, const ScaleGrid& grid) const {
  std::vector<ExtValue> vals;
  vals.reserve(grid.size());
  for (double t : grid.scales()) vals.push_back((*this)(x, y, t));
  return Profile(grid, std::move(vals));
}

Gauge Gauge::tabulate(const ScaleGrid& grid) const {
  if (table_ && table_->grid == grid) return *this;
  const std::size_t n = size(), m = grid.size();
  std::vector<ExtValue> values(n * n * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < m; ++k) values[(x * n + y) * m + k] = (*this)(x, y, grid[k]);
  Gauge g = tabulated(points_, grid, conorm_, std::move(values));
  g.name_ = name_;
  g.claims_symmetric_ = claims_symmetric_;
  g.claims_convex_ = claims_convex_;
  g.warnings_.insert(g.warnings_.begin(), warnings_.begin(), warnings_.end());
  return g;
}

Gauge Gauge::with_entry(std::size_t x, std::size_t y, std::size_t k, ExtValue v) const {
  if (!table_) throw InvalidArgument("with_entry requires a tabulated gauge");
  const std::size_t n = size(), m = table_->grid.size();
  if (x >= n || y >= n || k >= m) throw InvalidArgument("entry index out of range");
  if (conorm_ && !(v.value() < 1.0)) throw InvalidArgument("conorm-regime value must lie below 1");
  Gauge g = *this;
  auto values = table_->values;
  values[(x * n + y) * m + k] = v;
  g.table_ = std::make_shared<const Table>(Table{table_->grid, std::move(values)});
  return g;
}

Gauge Gauge::with_conorm(TConorm c) const {
  if (!conorm_) throw InvalidArgument("cannot attach a t-conorm to an additive gauge");
  Gauge g = *this;
  g.conorm_ = c;
  return g;
}

Gauge Gauge::with_name(std::string name) const {
  Gauge g = *this;
  g.name_ = std::move(name);
  return g;
}

Gauge Gauge::with_claims(bool symmetric, bool convex) const {
  Gauge g = *this;
  g.claims_symmetric_ = symmetric;
  g.claims_convex_ = convex;
  return g;
}

Gauge Gauge::with_warning(std::string w) const {
  Gauge g = *this;
  g.warnings_.push_back(std::move(w));
  return g;
}

}  // namespace quasimod
