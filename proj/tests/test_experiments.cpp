#include "doctest.h"
#include "fbt/experiments.hpp"

using namespace fbt;
using nlohmann::json;

TEST_SUITE("experiments") {
  TEST_CASE("config resolution validates keys and types") {
    const json d = default_config("annihilate");
    CHECK(d["n"] == 1024);
    CHECK_THROWS_AS(default_config("nope"), UsageError);
    CHECK_THROWS_AS(resolve_config("transform", json{{"S", "0,1"}}), UsageError);
    CHECK_THROWS_AS(resolve_config("transform", json{{"n", "many"}}), UsageError);
    CHECK_THROWS_AS(resolve_config("transform", json{{"n", 1.5}}), UsageError);
    CHECK_THROWS_AS(resolve_config("transform", json{{"f", "square"}}), UsageError);
    CHECK_THROWS_AS(resolve_config("annihilate", json{{"S", "1,0"}}), UsageError);
    CHECK_THROWS_AS(resolve_config("transform", json::array()), UsageError);
    const json r = resolve_config("annihilate", json{{"S", "0,1;2,3"}, {"alpha", 1}});
    CHECK(r["S"] == json::parse("[[0.0,1.0],[2.0,3.0]]"));
    CHECK(r["alpha"] == 1);
  }

  TEST_CASE("range errors surface as usage errors") {
    CHECK_THROWS_AS(run_experiment("transform", json{{"alpha", -0.6}}), UsageError);
    CHECK_THROWS_AS(run_experiment("transform", json{{"n", 100}}), UsageError);
    CHECK_THROWS_AS(run_experiment("thin-check", json{{"eps", 1.5}}), UsageError);
    CHECK_THROWS_AS(run_experiment("annihilate", json{{"S", "0,9"}}), UsageError);
  }

  TEST_CASE("reports embed config and version and are reproducible") {
    const json cfg{{"instances", 5}, {"seed", 42}, {"n", 256}};
    const auto a = run_experiment("heisenberg", cfg);
    const auto b = run_experiment("heisenberg", cfg);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.report["config"]["seed"] == 42);
    CHECK(a.report["version"] == library_version());
    CHECK(a.passed);
    CHECK(a.csv.rfind("x,f,Ff\n", 0) == 0);
    const auto c = run_experiment("heisenberg", json{{"instances", 5}, {"seed", 43}, {"n", 256}});
    CHECK(c.report["random_min_ratio"] != a.report["random_min_ratio"]);
  }

  TEST_CASE("thin commands") {
    const auto t = run_experiment("thin-example", json::object());
    CHECK(t.passed);
    CHECK(t.report["is_thin"] == true);
    const auto c = run_experiment("thin-check", json{{"S", "3,4"}, {"eps", 0.5}});
    CHECK(!c.passed);
    CHECK(c.report["witness_window"].is_array());
  }

  TEST_CASE("annihilate reports the documented keys") {
    const auto r = run_experiment("annihilate", json{{"S", "0,0.3"}, {"Sigma", "0,0.4"}, {"n", 256}, {"instances", 10}});
    for (const char* k : {"alpha", "S", "Sigma", "R", "n", "op_norm", "hs_norm", "hs_bound", "D", "C", "violations"})
      CHECK(r.report.contains(k));
    CHECK(r.passed);
    CHECK(r.report["op_norm"].get<double>() < 1.0);
    CHECK(r.report["violations"] == 0);
  }

  TEST_CASE("local reports per regime") {
    const auto r = run_experiment("local", json{{"instances", 20}, {"n", 512}});
    CHECK(r.passed);
    REQUIRE(r.report["regimes"].size() == 2);
    for (const auto& g : r.report["regimes"]) {
      for (const char* k : {"regime", "s", "alpha", "K_or_Kprime", "worst_ratio", "instances", "violations"})
        CHECK(g.contains(k));
      CHECK(g["violations"] == 0);
    }
    const auto one = run_experiment("local", json{{"instances", 5}, {"n", 512}, {"s", 2.5}});
    CHECK(one.report["regimes"][0]["regime"] == 2);
  }
}
