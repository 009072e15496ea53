#include <gtest/gtest.h>

#include <cmath>

#include "quasimod/axioms.hpp"
#include "quasimod/json_io.hpp"

namespace quasimod::io {
namespace {

TEST(JsonIo, ExtValues) {
  EXPECT_TRUE(read_ext(json("inf"), "v").is_infinite());
  EXPECT_EQ(read_ext(json(1.5), "v"), ExtValue(1.5));
  EXPECT_THROW((void)read_ext(json(-1), "v"), FormatError);
  EXPECT_THROW((void)read_ext(json("big"), "v"), FormatError);
  EXPECT_EQ(write_ext(ExtValue::infinity()), json("inf"));
  EXPECT_EQ(write_real(-std::numeric_limits<double>::infinity()), json("-inf"));
}

TEST(JsonIo, TabulatedGauge) {
  const json doc = json::parse(R"({
    "regime": "conorm", "conorm": "prob_sum", "points": ["a", "b"], "grid": [1, 2],
    "table": {"a|b": [0.5, 0.2], "b|a": ["inf", 0.9]}
  })");
  const GaugeDocument g = read_gauge(doc);
  EXPECT_EQ(g.gauge.points().size(), 2u);
  EXPECT_EQ(g.gauge.conorm().kind(), TConorm::Kind::ProbabilisticSum);
  EXPECT_EQ(g.gauge(0, 1, 2.0), ExtValue(0.2));
  EXPECT_TRUE(g.gauge(0, 0, 1.0).is_zero());
  ASSERT_TRUE(g.grid.has_value());
  EXPECT_EQ(g.grid->size(), 2u);
}

TEST(JsonIo, TabulatedGaugeErrorsNameTheKey) {
  auto message = [](const char* text) {
    try {
      (void)read_gauge(json::parse(text));
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"points":["a","b"],"grid":[1],"table":{"a|b":[1]}})").find("b|a"), std::string::npos);
  EXPECT_NE(message(R"({"points":["a","b"],"grid":[1],"table":{"a|b":[1,2],"b|a":[1]}})").find("a|b"),
            std::string::npos);
  EXPECT_NE(message(R"({"points":["a","b"],"grid":[1],"table":{"a|c":[1],"b|a":[1]}})").find("'c'"),
            std::string::npos);
  EXPECT_NE(message(R"({"points":["a"],"table":{}})").find("grid"), std::string::npos);
  EXPECT_NE(message(R"({"points":["a"],"grid":[2,1],"table":{}})").find("grid"), std::string::npos);
  EXPECT_NE(message(R"({"kind":"spline","points":["a"]})").find("spline"), std::string::npos);
  EXPECT_NE(message(R"({"points":["a","a"],"grid":[1],"table":{}})").find("points"), std::string::npos);
}

TEST(JsonIo, ClosedFormKinds) {
  const GaugeDocument mc =
      read_gauge(json::parse(R"({"kind":"min_cap","points":["x","y"],"rho":{"x|y":1,"y|x":3},"grid":[0.5,1,4]})"));
  EXPECT_EQ(mc.gauge(0, 1, 4.0), ExtValue(1));
  EXPECT_EQ(mc.gauge(1, 0, 0.5), ExtValue(0.5));
  const GaugeDocument ratio =
      read_gauge(json::parse(R"({"kind":"ratio","conorm":"max","points":["x","y"],"rho":{"x|y":1,"y|x":3}})"));
  EXPECT_NEAR(ratio.gauge(1, 0, 1.0).value(), 0.75, 1e-15);
  EXPECT_FALSE(ratio.grid.has_value());
  const GaugeDocument sm = read_gauge(
      json::parse(R"({"kind":"scaled_metric","points":["x","y"],"d":{"x|y":2,"y|x":2},"grid":[1,2],"g":[1,0.5]})"));
  EXPECT_EQ(sm.gauge(0, 1, 2.0), ExtValue(1));
  EXPECT_THROW((void)read_gauge(json::parse(R"({"kind":"scaled_metric","points":["x"],"d":{},"grid":[1],"g":[]})")),
               FormatError);
  const GaugeDocument gr = read_gauge(json::parse(
      R"({"kind":"graph","vertices":["u","v"],"edges":[{"from":"u","to":"v","cost":2}],"grid":[1,3]})"));
  EXPECT_EQ(gr.gauge(1, 0, 3.0), ExtValue(3));
  EXPECT_EQ(gr.gauge(0, 1, 3.0), ExtValue(2));
}

TEST(JsonIo, GraphAndSchedule) {
  const json gdoc = json::parse(R"({"vertices":["a","b","c"],
    "edges":[{"from":"a","to":"b","cost":1,"mu":2},{"from":"b","to":"c","cost":2}],
    "measure":{"a":1,"b":1,"c":3}})");
  const DirectedGraph g = read_graph(gdoc);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_DOUBLE_EQ(g.edges()[0].mu, 2);
  const CostSchedule s =
      read_schedule(json::parse(R"({"times":[0,1],"costs":{"0|0":1,"0|b->c":2,"1|a->b":5,"1|1":0.5}})"), g);
  EXPECT_DOUBLE_EQ(s.costs[1][0], 5);
  EXPECT_DOUBLE_EQ(s.costs[1][1], 0.5);
  EXPECT_THROW((void)read_schedule(json::parse(R"({"times":[0],"costs":{"0|0":1}})"), g), FormatError);
  EXPECT_THROW((void)read_schedule(json::parse(R"({"times":[0],"costs":{"0|0":1,"0|c->a":1}})"), g), FormatError);
  EXPECT_THROW((void)read_schedule(json::parse(R"({"times":[0],"costs":{"2|0":1,"0|1":1}})"), g), FormatError);
  EXPECT_THROW((void)read_graph(json::parse(R"({"vertices":["a"],"edges":[{"from":"a","to":"z"}]})")), FormatError);

  const EdgeOrliczFamily fam = read_edge_family(json::parse(R"({"kind":"double_phase","p":1,"q":2,"a":{"b->c":3}})"), g);
  EXPECT_THROW((void)read_edge_family(json::parse(R"({"kind":"double_phase","p":1,"q":2,"a":[1]})"), g), FormatError);
  EXPECT_THROW((void)read_edge_family(json::parse(R"({"kind":"cubic"})"), g), FormatError);
  (void)fam;
}

TEST(JsonIo, SpaceOrliczFunction) {
  const DiscreteMeasureSpace space = read_space(json::parse(R"({"points":["p","q"],"mu":{"p":1,"q":0.5}})"));
  const MusielakOrlicz phi = read_orlicz(
      json::parse(R"({"kind":"weighted","inner":{"kind":"variable_exponent","p":{"p":2,"q":3}},"w":{"p":2,"q":1}})"),
      space.points);
  EXPECT_DOUBLE_EQ(phi(0, 2), 8);
  EXPECT_DOUBLE_EQ(phi(1, 2), 8);
  const MusielakOrlicz uniform = read_orlicz(json::parse(R"({"kind":"variable_exponent","p":2})"), space.points);
  EXPECT_DOUBLE_EQ(uniform(1, 3), 9);
  const auto f = read_function(json::parse(R"({"q":-1,"p":2})"), space.points);
  EXPECT_EQ(f, (std::vector<double>{2, -1}));
  EXPECT_THROW((void)read_function(json::parse(R"({"p":2})"), space.points), FormatError);
  EXPECT_THROW((void)read_space(json::parse(R"({"points":["p"],"mu":{"p":0}})")), FormatError);
  EXPECT_THROW((void)read_orlicz(json::parse(R"({"kind":"variable_exponent","p":0.5})"), space.points), FormatError);
}

TEST(JsonIo, FamilySequenceEnvelope) {
  const SequenceFamily fam = read_family(json::parse(R"({"p":1,"members":[[1,0],[0,"inf"]]})"));
  EXPECT_DOUBLE_EQ(fam.p, 1);
  EXPECT_TRUE(std::isinf(fam.members[1][1]));
  const PointSet pts({"a", "b"});
  EXPECT_EQ(read_sequence(json::parse(R"({"sequence":["b","a","b"]})"), pts), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_THROW((void)read_sequence(json::parse(R"({"sequence":["c"]})"), pts), FormatError);
  const EnvelopeDocument env =
      read_envelope(json::parse(R"({"points":["a","b"],"d":{"a|b":1,"b|a":2},"phi":{"b":4},"L":2})"));
  EXPECT_EQ(env.f.domain, (std::vector<std::size_t>{1}));
  EXPECT_DOUBLE_EQ(env.f.lipschitz, 2);
  EXPECT_THROW((void)read_envelope(json::parse(R"({"points":["a"],"d":{},"phi":{"z":1}})")), FormatError);
}

TEST(JsonIo, WritersRoundTripShape) {
  DistanceMatrix d(PointSet({"a", "b"}));
  d(0, 1) = ExtValue(1.5);
  d(1, 0) = ExtValue::infinity();
  const json j = write(d);
  EXPECT_EQ(j["a"]["b"], json(1.5));
  EXPECT_EQ(j["b"]["a"], json("inf"));
  EXPECT_EQ(to_csv(d), "from,a,b\na,0,1.5\nb,inf,0\n");

  AxiomReport r;
  r.checked = {"QM1"};
  r.violations.push_back(Violation{"QM1", {"a"}, {1.0}, ExtValue(0.5), ExtValue(0)});
  const json w = write(r);
  EXPECT_FALSE(w["ok"].get<bool>());
  EXPECT_EQ(w["violations"][0]["points"][0], "a");
}

}  // namespace
}  // namespace quasimod::io
