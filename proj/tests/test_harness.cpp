#include <catch2/catch_amalgamated.hpp>

#include <bethe/report.hpp>
#include <bethe/suites.hpp>

#include <cstdlib>
#include <string>
#include <vector>

using namespace bethe;

TEST_CASE("report pass flag is a strict residual/tolerance comparison",
          "[harness]") {
  const CheckReport pass = make_report("id", "d", 5, 1e-12, 1e-10, 3);
  REQUIRE(pass.passed);
  const CheckReport fail = make_report("id", "d", 5, 1e-9, 1e-10, 3);
  REQUIRE_FALSE(fail.passed);
  // boundary: equality does not pass
  const CheckReport edge = make_report("id", "d", 5, 1e-10, 1e-10, 3);
  REQUIRE_FALSE(edge.passed);
}

TEST_CASE("report serialization has the fixed field set and masking",
          "[harness]") {
  const CheckReport r = make_report("some-check", "0123456789abcdef", 7,
                                    2.5e-13, 1e-10, 42);
  const ojson j = report_to_json(r);
  REQUIRE(j.size() == 7);
  REQUIRE(j["check_id"] == "some-check");
  REQUIRE(j["params_digest"] == "0123456789abcdef");
  REQUIRE(j["samples"] == 7);
  REQUIRE(j["max_residual"] == 2.5e-13);
  REQUIRE(j["tolerance"] == 1e-10);
  REQUIRE(j["passed"] == true);
  REQUIRE(j["elapsed_ms"] == 42);
  const ojson masked = report_to_json(r, /*mask_elapsed=*/true);
  REQUIRE(masked["elapsed_ms"] == 0);
}

TEST_CASE("model digest is stable and sensitive to every input",
          "[harness]") {
  const RunConfig cfg = default_config();
  const ModelParams p = cfg.model_for(2, TransferCase::LowerUpper);
  const std::string base = digest_model(p, 7, TransferCase::LowerUpper);
  REQUIRE(base == digest_model(p, 7, TransferCase::LowerUpper));
  REQUIRE(base.size() == 16);
  REQUIRE(base != digest_model(p, 8, TransferCase::LowerUpper));
  ModelParams p2 = p;
  p2.bulk.q += Complex(1e-9, 0.0);
  REQUIRE(base != digest_model(p2, 7, TransferCase::LowerUpper));
  REQUIRE(base != digest_model(p, 7, TransferCase::Diag));
}

TEST_CASE("config serialization round-trips through JSON", "[harness]") {
  const RunConfig cfg = default_config();
  const RunConfig back = config_from_json(config_to_json(cfg));
  REQUIRE(back.seed == cfg.seed);
  REQUIRE(back.n == cfg.n);
  REQUIRE(back.kase == cfg.kase);
  REQUIRE(back.q == cfg.q);
  REQUIRE(back.v_pool == cfg.v_pool);
  REQUIRE(back.left.kappa == cfg.left.kappa);
  REQUIRE(back.right.tau == cfg.right.tau);
  REQUIRE(back.tol.operator_identity == cfg.tol.operator_identity);
  REQUIRE(back.tol.finite_difference == cfg.tol.finite_difference);
  // identical parameters produce identical digests
  REQUIRE(digest_model(back.model_for(2), cfg.seed, back.kase) ==
          digest_model(cfg.model_for(2), cfg.seed, cfg.kase));
}

TEST_CASE("unknown configuration keys are rejected with their path",
          "[harness]") {
  ojson j = config_to_json(default_config());
  j["bogus"] = 1;
  try {
    config_from_json(j);
    FAIL("expected a rejection");
  } catch (const std::runtime_error& e) {
    REQUIRE(std::string(e.what()).find("unknown key") != std::string::npos);
    REQUIRE(std::string(e.what()).find("bogus") != std::string::npos);
  }

  ojson nested = config_to_json(default_config());
  nested["left"]["extra"] = 2;
  try {
    config_from_json(nested);
    FAIL("expected a rejection");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    REQUIRE(msg.find("unknown key") != std::string::npos);
    REQUIRE(msg.find("left") != std::string::npos);
    REQUIRE(msg.find("extra") != std::string::npos);
  }
}

TEST_CASE("complex config entries must be two-element numeric arrays",
          "[harness]") {
  ojson j = config_to_json(default_config());
  j["q"] = "not-a-pair";
  REQUIRE_THROWS_AS(config_from_json(j), std::runtime_error);
  ojson j2 = config_to_json(default_config());
  j2["q"] = ojson::array({1.0});
  REQUIRE_THROWS_AS(config_from_json(j2), std::runtime_error);
}

TEST_CASE("environment tolerance override applies and validates",
          "[harness]") {
  ::setenv("BETHE_SEGMENT_TOL", "1e-8", 1);
  REQUIRE(default_tolerances().operator_identity == 1e-8);

  ::setenv("BETHE_SEGMENT_TOL", "not-a-number", 1);
  try {
    default_tolerances();
    FAIL("expected a rejection");
  } catch (const std::runtime_error& e) {
    REQUIRE(std::string(e.what()).find("BETHE_SEGMENT_TOL") != std::string::npos);
  }
  ::setenv("BETHE_SEGMENT_TOL", "-1", 1);
  REQUIRE_THROWS_AS(default_tolerances(), std::runtime_error);

  ::unsetenv("BETHE_SEGMENT_TOL");
  REQUIRE(default_tolerances().operator_identity == 1e-10);
  REQUIRE(default_tolerances().finite_difference == 1e-7);
}

TEST_CASE("suite registry has unique ids and a working selector",
          "[harness]") {
  const std::vector<Suite>& reg = suite_registry();
  REQUIRE(reg.size() >= 25);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    REQUIRE_FALSE(reg[i].id.empty());
    REQUIRE_FALSE(reg[i].description.empty());
    for (std::size_t j = i + 1; j < reg.size(); ++j)
      REQUIRE(reg[i].id != reg[j].id);
  }

  RunConfig cfg = default_config();
  const std::vector<CheckReport> reports = run_suites(cfg, {"fn-crossing"});
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].check_id == "fn-crossing");
  REQUIRE(reports[0].passed);
  REQUIRE_THROWS_AS(run_suites(cfg, {"no-such-suite"}), std::runtime_error);
}

TEST_CASE("suite selection by config list and full-run ordering",
          "[harness]") {
  RunConfig cfg = default_config();
  cfg.suites = {"ybe", "fn-crossing"};
  const std::vector<CheckReport> reports = run_suites(cfg, cfg.suites);
  REQUIRE(reports.size() == 2);
  // reports come back sorted by id
  REQUIRE(reports[0].check_id == "fn-crossing");
  REQUIRE(reports[1].check_id == "ybe");
}

TEST_CASE("identical config and seed give byte-identical masked reports",
          "[harness]") {
  RunConfig cfg = default_config();
  cfg.suites = {"fn-crossing", "iduwt"};
  const std::string a =
      reports_to_json(run_suites(cfg, cfg.suites), /*mask_elapsed=*/true).dump();
  const std::string b =
      reports_to_json(run_suites(cfg, cfg.suites), /*mask_elapsed=*/true).dump();
  REQUIRE(a == b);
}
