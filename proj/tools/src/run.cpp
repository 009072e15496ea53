#include "run.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quasimod/axioms.hpp"
#include "quasimod/json_io.hpp"
#include "quasimod/luxemburg.hpp"

namespace quasimod::cli {
namespace {

using io::json;

/// Input problems that map to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

json load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and may point one past the end.
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

const std::string& input(const RunConfig& c, std::size_t k, const char* what) {
  if (c.inputs.size() <= k)
    throw UsageError(c.command + ": missing input #" + std::to_string(k + 1) + " (" + what + ")");
  return c.inputs[k];
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

io::GaugeDocument load_gauge(const RunConfig& c, const std::string& path) {
  json doc = load(path);
  if (c.conorm && doc.is_object()) doc["conorm"] = *c.conorm;
  return io::read_gauge(doc);
}

ScaleGrid grid_for(const RunConfig& c, const io::GaugeDocument& doc) {
  if (!c.grid.empty()) {
    try {
      return ScaleGrid(c.grid);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--grid: ") + e.what());
    }
  }
  if (doc.grid) return *doc.grid;
  throw UsageError("no scale grid: pass --grid or add 'grid' to the gauge document");
}

LuxemburgOptions lux_options(const RunConfig& c) {
  LuxemburgOptions o;
  o.threshold = c.threshold;
  o.tol = c.tol;
  o.lambda_max = c.lambda_max;
  return o;
}

json header(const RunConfig& c, const PointSet& points) {
  return {{"command", c.command}, {"points", points.ids()}};
}

json grid_json(const ScaleGrid& grid) { return grid.scales(); }

json witness(const std::optional<std::pair<std::size_t, std::size_t>>& w) {
  if (!w) return nullptr;
  return json::array({w->first, w->second});
}

struct Outcome {
  json report;
  int code = kOk;
  /// Distance matrix for CSV output, if the command has one.
  std::optional<DistanceMatrix> table;
};

Outcome check_axioms_cmd(const RunConfig& c) {
  const auto doc = load_gauge(c, input(c, 0, "gauge"));
  const ScaleGrid grid = grid_for(c, doc);
  CheckOptions opt;
  opt.rel_tol = std::max(c.tol * 1e-3, 1e-15);
  opt.seed = c.seed;
  opt.triangle_samples = c.sample;
  const AxiomReport rep = check_axioms(doc.gauge, grid, opt);
  spdlog::info("check-axioms: {} violations", rep.violations.size());
  json out = header(c, doc.gauge.points());
  out["grid"] = grid_json(grid);
  out["regime"] = doc.gauge.is_conorm() ? std::string(doc.gauge.conorm().name()) : std::string("additive");
  if (c.sample) out["seed"] = c.seed;
  out["report"] = io::write(rep);
  return {out, rep.ok() ? kOk : kViolations, std::nullopt};
}

Outcome topology_cmd(const RunConfig& c) {
  const auto doc = load_gauge(c, input(c, 0, "gauge"));
  const ScaleGrid grid = grid_for(c, doc);
  const JoinReport join = verify_join_equality(doc.gauge, grid);
  const AxiomReport qu = quasi_uniformity_report(doc.gauge, grid);
  json out = header(c, doc.gauge.points());
  out["grid"] = grid_json(grid);
  const json join_json = io::write(join);
  for (const auto& [k, v] : join_json.items()) out[k] = v;
  out["quasi_uniformity"] = io::write(qu);
  return {out, join.join_equals_sym && qu.ok() ? kOk : kViolations, std::nullopt};
}

Outcome lp_cover(const RunConfig& c, const json& doc) {
  const SequenceFamily fam = io::read_family(doc);
  const double eps = need(c.eps, "--eps");
  const TailResult tail = lp_tail_criterion(fam, eps, c.tail_budget);
  json out{{"command", c.command}, {"p", fam.p}, {"eps", eps}, {"members", fam.members.size()}};
  out["pointwise_bounded"] = tail.pointwise_bounded;
  json sup = json::array();
  for (double v : tail.coordinate_sup) sup.push_back(io::write_real(v));
  out["coordinate_sup"] = sup;
  out["verdict"] = tail.verdict;
  out["tail_index"] = tail.tail_index ? json(*tail.tail_index) : json(nullptr);
  bool ok = tail.verdict;
  if (tail.verdict) {
    const LpNet net = lp_net(fam, eps, *tail.tail_index);
    out["net"] = {{"centers", net.centers}, {"radius", net.radius}, {"verified", net.verified}};
    ok = net.verified;
  } else if (tail.witness_member) {
    out["witness"] = {{"member", *tail.witness_member}, {"tail", io::write_real(tail.witness_tail)}};
  }
  return {out, ok ? kOk : kViolations, std::nullopt};
}

Outcome cover_cmd(const RunConfig& c) {
  const json doc = load(input(c, 0, "gauge or sequence family"));
  if (doc.is_object() && doc.contains("members")) return lp_cover(c, doc);

  json gdoc = doc;
  if (c.conorm && gdoc.is_object()) gdoc["conorm"] = *c.conorm;
  const io::GaugeDocument gauge = io::read_gauge(gdoc);
  const Gauge& g = gauge.gauge;
  const double r = need(c.radius, "--radius");
  const double t = need(c.scale, "--scale");
  if (!(r > 0) || !(t > 0)) throw UsageError("--radius and --scale must be positive");
  std::vector<std::size_t> sample(g.size());
  for (std::size_t i = 0; i < sample.size(); ++i) sample[i] = i;

  const CoverResult net = greedy_net(g, sample, r, t, c.side);
  json out = header(c, g.points());
  out["net"] = io::write(net, g.points());
  int code = net.verified ? kOk : kViolations;

  if (c.side == Side::TwoSided) {
    const double s = g.is_conorm() ? g.conorm().split_radius(r) : r / 4;
    const CoverResult fwd = greedy_net(g, sample, s, t / 2, Side::Forward);
    const CoverResult bwd = greedy_net(g, sample, s, t / 2, Side::Backward);
    try {
      const CoverResult composed = two_sided_cover_from_onesided(g, sample, fwd, bwd, r, t);
      out["composed"] = io::write(composed, g.points());
    } catch (const CellInclusionError& e) {
      const CoverCell& cell = e.cell();
      const auto& ids = g.points().ids();
      out["composed"] = {{"error", "cell-inclusion"},
                         {"forward_center", ids[cell.forward_center]},
                         {"backward_center", ids[cell.backward_center]},
                         {"representative", ids[cell.representative]},
                         {"escapee", ids[*cell.escapee]},
                         {"split_radius", s}};
      code = kViolations;
    }
  }

  if (c.inputs.size() > 1) {
    const auto seq = io::read_sequence(load(c.inputs[1]), g.points());
    const CauchyResult cr = classify_cauchy(g, seq, r, t);
    out["sequence"] = {{"kind", std::string(cauchy_kind_name(cr.kind))},
                       {"forward_start", cr.forward_start},
                       {"backward_start", cr.backward_start},
                       {"forward_witness", witness(cr.forward_witness)},
                       {"backward_witness", witness(cr.backward_witness)}};
  }
  return {out, code, std::nullopt};
}

Outcome luxemburg_cmd(const RunConfig& c) {
  const auto doc = load_gauge(c, input(c, 0, "gauge"));
  if (doc.gauge.is_conorm()) throw UsageError("luxemburg: needs an additive-regime gauge");
  const DistanceMatrix d = luxemburg_matrix(doc.gauge, lux_options(c));
  const AxiomReport rep = quasi_pseudometric_check(d, 2 * c.tol);
  json out = header(c, doc.gauge.points());
  out["threshold"] = c.threshold;
  out["distances"] = io::write(d);
  out["report"] = io::write(rep);
  return {out, rep.ok() ? kOk : kViolations, d};
}

Outcome graph_cmd(const RunConfig& c) {
  const json doc = load(input(c, 0, "graph"));
  const DirectedGraph g = io::read_graph(doc);
  json out = header(c, g.vertices());
  const DistanceMatrix fwd = forward_distances(g);
  out["forward"] = io::write(fwd);
  out["backward"] = io::write(backward_distances(g));
  out["asymmetry_index"] = asymmetry_index(g);
  std::optional<DistanceMatrix> table = fwd;

  if (doc.contains("f") != doc.contains("phi")) throw UsageError("graph: 'f' and 'phi' must be given together");
  if (doc.contains("f")) {
    const auto f = io::read_function(doc["f"], g.vertices());
    const EdgeOrliczFamily phi = io::read_edge_family(doc["phi"], g);
    const LuxemburgResult lux = energy_luxemburg(g, f, phi, lux_options(c));
    out["energy"] = {{"forward", io::write_ext(forward_energy(g, f, phi))},
                     {"backward", io::write_ext(backward_energy(g, f, phi))},
                     {"luxemburg", io::write_ext(lux.value)}};
  }

  if (c.schedule) {
    const CostSchedule s = io::read_schedule(load(*c.schedule), g);
    const double t = need(c.time, "--time");
    DistanceMatrix dyn(g.vertices());
    bool clamped = false;
    double used = 0;
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y) {
        const DynamicDistance r = dynamic_distance(g, s, t, x, y);
        dyn(x, y) = r.value;
        clamped = r.clamped;
        used = r.time_used;
      }
    out["dynamic"] = {{"time", t}, {"time_used", used}, {"clamped", clamped}, {"distances", io::write(dyn)}};
    table = dyn;
  }
  return {out, kOk, table};
}

struct OrliczInputs {
  DiscreteMeasureSpace space;
  json phi;
  std::vector<double> f;
  std::optional<std::vector<double>> g;
};

OrliczInputs orlicz_inputs(const RunConfig& c) {
  if (c.inputs.size() == 1) {
    const json doc = load(c.inputs[0]);
    DiscreteMeasureSpace space = io::read_space(doc);
    if (!doc.contains("phi") || !doc.contains("f")) throw io::FormatError("orlicz document: needs 'phi' and 'f'");
    OrliczInputs in{space, doc["phi"], io::read_function(doc["f"], space.points), std::nullopt};
    if (doc.contains("g")) in.g = io::read_function(doc["g"], space.points);
    return in;
  }
  DiscreteMeasureSpace space = io::read_space(load(input(c, 0, "space")));
  OrliczInputs in{space, load(input(c, 1, "orlicz")), io::read_function(load(input(c, 2, "function")), space.points),
                  std::nullopt};
  if (c.inputs.size() > 3) in.g = io::read_function(load(c.inputs[3]), space.points);
  return in;
}

Outcome orlicz_cmd(const RunConfig& c) {
  const OrliczInputs in = orlicz_inputs(c);
  const auto& pts = in.space.points;
  const LuxemburgOptions opt = lux_options(c);
  json out = header(c, pts);

  if (in.phi.is_object() && in.phi.contains("plus")) {
    if (!in.phi.contains("minus")) throw io::FormatError("orlicz: a one-sided pair needs 'plus' and 'minus'");
    const OneSidedPair pair{io::read_orlicz(in.phi["plus"], pts), io::read_orlicz(in.phi["minus"], pts)};
    const auto [rp, rm] = one_sided_modulars(in.space, pair, in.f);
    const OneSidedNorms n = one_sided_gauges(in.space, pair, in.f, opt);
    out["modular"] = {{"plus", io::write_ext(rp)}, {"minus", io::write_ext(rm)}};
    out["norm"] = {{"plus", n.plus}, {"minus", n.minus}, {"sym", n.sym}};
    if (in.g) {
      const auto [dp, dm] = quasi_metric_from_gauges(in.space, pair, in.f, *in.g, opt);
      const auto [rp2, rm2] = quasi_metric_from_gauges(in.space, pair, *in.g, in.f, opt);
      out["distance"] = {{"d_plus", {{"f_to_g", dp}, {"g_to_f", rp2}}}, {"d_minus", {{"f_to_g", dm}, {"g_to_f", rm2}}}};
    }
    return {out, kOk, std::nullopt};
  }

  const MusielakOrlicz phi = io::read_orlicz(in.phi, pts);
  const AxiomReport rep = unit_ball_check(in.space, phi, in.f, std::max(c.tol, 1e-6), opt);
  out["modular"] = io::write_ext(modular(in.space, phi, in.f));
  out["norm"] = io::write_ext(luxemburg_norm(in.space, phi, in.f, opt).value);
  if (in.g) {
    std::vector<double> diff(in.f.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = in.f[i] - (*in.g)[i];
    out["distance"] = io::write_ext(luxemburg_norm(in.space, phi, diff, opt).value);
  }
  out["report"] = io::write(rep);
  return {out, rep.ok() ? kOk : kViolations, std::nullopt};
}

Outcome envelope_cmd(const RunConfig& c) {
  const io::EnvelopeDocument doc = io::read_envelope(load(input(c, 0, "envelope")));
  const std::vector<double> up = upper_envelope(doc.f, doc.d);
  const std::vector<double> lo = lower_envelope(doc.f, doc.d);
  const bool compatible = is_one_sided_lipschitz(doc.f, doc.d);
  AxiomReport rep = lipschitz_check(up, doc.d, doc.f.lipschitz, c.tol);
  AxiomReport rep_lo = lipschitz_check(lo, doc.d, doc.f.lipschitz, c.tol);
  for (Violation& v : rep_lo.violations) v.axiom = "lower-" + v.axiom;
  for (Violation& v : rep.violations) v.axiom = "upper-" + v.axiom;
  rep.merge(std::move(rep_lo));
  rep.checked = {"upper-lipschitz", "lower-lipschitz"};
  if (compatible) {
    rep.checked.push_back("agreement");
    for (std::size_t k = 0; k < doc.f.domain.size(); ++k) {
      const std::size_t a = doc.f.domain[k];
      for (double v : {up[a], lo[a]})
        if (std::abs(v - doc.f.values[k]) > c.tol)
          rep.violations.push_back(Violation{"agreement", {doc.d.points().id(a)}, {},
                                             ExtValue(std::abs(v - doc.f.values[k])), ExtValue(c.tol)});
    }
  }
  rep.sort();

  const PointSet& pts = doc.d.points();
  json upper = json::object(), lower = json::object();
  for (std::size_t x = 0; x < pts.size(); ++x) {
    upper[pts.id(x)] = io::write_real(up[x]);
    lower[pts.id(x)] = io::write_real(lo[x]);
  }
  json out = header(c, pts);
  out["upper"] = upper;
  out["lower"] = lower;
  out["compatible"] = compatible;
  out["report"] = io::write(rep);
  return {out, rep.ok() ? kOk : kViolations, std::nullopt};
}

Outcome dispatch(const RunConfig& c) {
  if (c.command == "check-axioms") return check_axioms_cmd(c);
  if (c.command == "topology") return topology_cmd(c);
  if (c.command == "cover") return cover_cmd(c);
  if (c.command == "luxemburg") return luxemburg_cmd(c);
  if (c.command == "graph") return graph_cmd(c);
  if (c.command == "orlicz") return orlicz_cmd(c);
  if (c.command == "envelope") return envelope_cmd(c);
  throw UsageError("unknown command '" + c.command + "'");
}

bool wants_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"check-axioms", "topology", "cover",   "luxemburg",
                                              "graph",        "orlicz",   "envelope"};
  return names;
}

int run(const RunConfig& config, std::ostream& err) {
  if (!(config.tol > 0)) {
    err << "error: --tol must be positive\n";
    return kUsage;
  }
  Outcome outcome;
  try {
    outcome = dispatch(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    // Includes io::FormatError and UnknownPoint.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AxiomError& e) {
    // A builder rejected its input; the witness is in the message.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownPoint& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonMonotoneError& e) {
    // The level function is not an upper set in lambda: a finding about the gauge.
    outcome.report = {{"command", config.command}, {"error", "non-monotone"}, {"message", e.what()}};
    outcome.code = kViolations;
    outcome.table.reset();
  }

  std::string text;
  if (wants_csv(config.output)) {
    if (!outcome.table) {
      err << "error: " << config.command << " has no tabular output for CSV\n";
      return kUsage;
    }
    text = io::to_csv(*outcome.table);
  } else {
    text = outcome.report.dump(2) + "\n";
  }

  if (config.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) {
      err << "error: cannot write " << config.output << '\n';
      return kUsage;
    }
    out << text;
  }
  spdlog::debug("{}: exit {}", config.command, outcome.code);
  return outcome.code;
}

}  // namespace quasimod::cli
