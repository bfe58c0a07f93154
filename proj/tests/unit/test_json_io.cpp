#include "doctest.h"
#include "gscs/errors.hpp"
#include "gscs/json_io.hpp"
#include "test_support.hpp"

using namespace gscs;

TEST_CASE("catalog names load as graphs") {
  for (const std::string& name : catalog_names()) {
    const Graph g = graph_from_json(json(name));
    CHECK(g.size() == 6);
    CHECK(g.arc_count() == 10);
  }
  CHECK_THROWS_AS(graph_from_json(json("G7")), ConfigError);
  CHECK_THROWS_AS(graph_from_json(json("g1")), ConfigError);
}

TEST_CASE("inline graphs use one-based endpoints") {
  const json j = {{"n", 3},
                  {"undirected", true},
                  {"edges", {{1, 2}, {2, 3}, {1, 3}}}};
  const Graph g = graph_from_json(j);
  CHECK(g.size() == 3);
  CHECK(g.arc_count() == 6);
  CHECK(g.has_edge(0, 2));

  const json directed = {{"n", 2}, {"edges", {{1, 2}, {2, 1}}}};
  CHECK(graph_from_json(directed).arc_count() == 2);
}

TEST_CASE("malformed graph json is a configuration error") {
  CHECK_THROWS_AS(graph_from_json(json(7)), ConfigError);
  CHECK_THROWS_AS(graph_from_json(json::object()), ConfigError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", "nope"}}), ConfigError);
  CHECK_THROWS_AS(graph_from_json({{"n", 3}, {"edges", {{1, 2, 3}}}}),
                  ConfigError);
  CHECK_THROWS_AS(graph_from_json({{"n", 2.5}, {"edges", {{1, 2}}}}),
                  ConfigError);
}

TEST_CASE("valid structure with bad content raises domain errors") {
  // out-of-range endpoint and a disconnected graph both pass the json layer
  CHECK_THROWS_AS(
      graph_from_json({{"n", 3}, {"undirected", true}, {"edges", {{1, 4}}}}),
      InvalidEdge);
  CHECK_THROWS_AS(
      graph_from_json({{"n", 3}, {"undirected", true}, {"edges", {{1, 2}}}}),
      NotStronglyConnected);
  CHECK_THROWS_AS(
      graph_from_json({{"n", 3}, {"edges", {{1, 1}}}}), InvalidEdge);
}

TEST_CASE("infection kinds parse with defaults and parameters") {
  CHECK(infection_from_json({{"kind", "rational"}}).name == "rational");
  CHECK(infection_from_json({{"kind", "identity"}}).name == "identity");
  const InfectionFunction sat =
      infection_from_json({{"kind", "saturating"}, {"a", 0.7}});
  CHECK(sat.eval(1e9) == doctest::Approx(0.7));
  CHECK_THROWS_AS(infection_from_json({{"kind", "logistic"}}), ConfigError);
  CHECK_THROWS_AS(infection_from_json({{"kind", "saturating"}}), ConfigError);
  CHECK_THROWS_AS(infection_from_json(json("rational")), ConfigError);
  // structurally fine, domain-invalid
  CHECK_THROWS_AS(infection_from_json({{"kind", "saturating"}, {"a", -1}}),
                  InvalidParams);
}

TEST_CASE("model parameters load from json") {
  const json j = {{"alpha", 0.05}, {"beta", 0.01},
                  {"gamma", 1.0},  {"delta", 1.0},
                  {"x", {0.2, 0.2, 0.2, 0.2, 0.1, 0.1}},
                  {"y", {{"kind", "uniform"}, {"budget", 0.5}}},
                  {"z", {{"kind", "degree_first"}, {"budget", 0.5}}},
                  {"graph", "G1"}};
  const GscsParams p = params_from_json(j);
  CHECK(p.alpha() == 0.05);
  CHECK(p.x()[0] == 0.2);
  CHECK(p.y()[3] == doctest::Approx(0.5 / 6).epsilon(1e-15));
  CHECK(p.z()[0] == doctest::Approx(0.25).epsilon(1e-15)); // hub half share
  CHECK(p.f().name == "rational"); // the default

  json bad = j;
  bad.erase("gamma");
  CHECK_THROWS_AS(params_from_json(bad), ConfigError);
  bad = j;
  bad["x"] = {0.2, 0.2};
  CHECK_THROWS_AS(params_from_json(bad), DimensionMismatch);
  bad = j;
  bad["gamma"] = 0.0;
  CHECK_THROWS_AS(params_from_json(bad), InvalidParams);
  bad = j;
  bad["x"] = "lots";
  CHECK_THROWS_AS(params_from_json(bad), ConfigError);
}

TEST_CASE("sweep configs start from the stock experiment and override") {
  const SweepConfig plain =
      sweep_config_from_json({{"experiment", "rpr_sweep"}});
  CHECK(plain.kind == ExperimentKind::rpr_sweep);
  CHECK(plain.graphs.size() == 6);
  CHECK(plain.combos.size() == 12);

  const json j = {{"experiment", "rpr_sweep"},
                  {"graphs", {"G1", "G6"}},
                  {"r_grid", {0.5, 1, 2}},
                  {"combos",
                   {{{"x", "uniform"}, {"y", "degree_first"},
                     {"z", "degree_last"}}}}};
  const SweepConfig cfg = sweep_config_from_json(j);
  CHECK(cfg.graphs.size() == 2);
  CHECK(cfg.graphs[1].first == "G6");
  CHECK(cfg.r_grid == std::vector<Scalar>{0.5, 1, 2});
  REQUIRE(cfg.combos.size() == 1);
  CHECK(cfg.combos[0].label == "a");
  CHECK(cfg.combos[0].y == SchemeKind::degree_first);
  CHECK(cfg.combos[0].z == SchemeKind::degree_last);

  const SweepConfig scale = sweep_config_from_json(
      {{"experiment", "scale_sweep"}, {"s_grid", {3, 4}}});
  CHECK(scale.kind == ExperimentKind::scale_sweep);
  CHECK(scale.s_grid == std::vector<int>{3, 4});
  CHECK(scale.r_ad_grid.size() == 3); // untouched default

  CHECK_THROWS_AS(sweep_config_from_json({{"experiment", "walk"}}),
                  ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json(json::object()), ConfigError);
}

TEST_CASE("graphs round-trip through json") {
  for (const std::string& name : {"G1", "G4", "G6"}) {
    const Graph g = catalog_graph(name);
    const Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.size() == g.size());
    CHECK((back.adjacency().array() == g.adjacency().array()).all());
  }
}

TEST_CASE("doubles serialize with full round-trip precision") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3) == "0.33333333333333331");
  const Scalar third = std::stod(format_double(1.0 / 3));
  CHECK(third == 1.0 / 3);
}

TEST_CASE("report writers expose the numbers the cli prints") {
  testsupport::Rng rng(77);
  const auto p = testsupport::random_params(rng, catalog_graph("G2"));
  const EquilibriumResult res = solve(p);
  const json j = equilibrium_to_json(res);
  CHECK(j["S_L"].get<Scalar>() == res.limit_security);
  CHECK(j["iterations"].get<int>() == res.iterations);
  CHECK(j["c_star"].size() == 6);
  CHECK(j["within_bounds"].get<bool>());

  const Vector c_star = res.c_star;
  const SensitivityReport rep = sensitivity_with_fd_check(
      p, c_star, Parameter::global(Parameter::Kind::beta));
  const json s = sensitivity_to_json(rep);
  CHECK(s["parameter"].get<std::string>() == "beta");
  CHECK(s["dS_L"].get<Scalar>() == rep.d_limit_security);
  CHECK(s["dC_star"].size() == 6);
  CHECK(s["fd_rel_err"].get<Scalar>() == *rep.fd_rel_err);

  const json v = validation_to_json(validate_infection_function(
      rational_infection(), default_validation_grid()));
  CHECK(v["all_passed"].get<bool>());
  CHECK(v["checks"].size() == 5);
}
