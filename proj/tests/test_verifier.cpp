#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "racah/verifier.hpp"

using namespace racah;

namespace {

SuiteConfig small_config(std::vector<std::string> suites, int rank = 3) {
  SuiteConfig cfg;
  cfg.rank = rank;
  cfg.window = 6;
  cfg.seed = 1;
  cfg.params = default_param_sets(cfg.seed, cfg.window);
  cfg.suites = std::move(suites);
  return cfg;
}

}  // namespace

TEST(Verifier, EmptyReport) {
  auto r = run_suite(small_config({}));
  EXPECT_TRUE(r.instances.empty());
  EXPECT_EQ(emit_report(r, "json"), "{\"instances\": []}\n");
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Verifier, DefinitionsRank3) {
  auto r = run_suite(small_config({"definitions"}));
  // (central 18 + decomposition 1 + quad 6) x (1 symbolic + 3 parameter sets)
  EXPECT_EQ(r.instances.size(), 25u * 4);
  for (const auto& rec : r.instances) {
    if (rec.method == Method::symbolic_reduce)
      EXPECT_EQ(rec.status, Status::proved_zero) << rec.relation << " " << rec.payload;
    else
      EXPECT_EQ(rec.status, Status::zero_on_window) << rec.relation << " " << rec.payload << " " << rec.params;
    EXPECT_FALSE(rec.anchor.empty());
  }
  auto s = r.summary();
  EXPECT_EQ(s.failed + s.inconclusive, 0u);
}

TEST(Verifier, Deterministic) {
  auto cfg = small_config({"definitions", "rank1"});
  std::string a = emit_report(run_suite(cfg), "json");
  std::string b = emit_report(run_suite(cfg), "json");
  EXPECT_EQ(a, b);
  EXPECT_EQ(emit_report(run_suite(cfg), "human"), emit_report(run_suite(cfg), "human"));
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Verifier, ExitCodeAndSort) {
  VerificationReport r;
  InstanceRecord ok{"quad", 4, "I=1 J=2 K=3", "anchor", Method::symbolic_reduce, Status::proved_zero, {}, {}, {}, 0};
  InstanceRecord bad = ok;
  bad.relation = "central";
  bad.status = Status::failed;
  bad.witness = Witness{{1, 0}, "3|0,0>"};
  r.instances = {ok};
  EXPECT_EQ(r.exit_code(), 0);
  r.instances.push_back(bad);
  EXPECT_EQ(r.exit_code(), 1);
  r.sort();
  EXPECT_EQ(r.instances.front().relation, "central");
  std::string json = emit_report(r, "json");
  EXPECT_NE(json.find("\"status\":\"FAILED\""), std::string::npos);
  EXPECT_NE(json.find("\"witness\":{\"t\":1,\"s\":0,\"defect\":\"3|0,0>\"}"), std::string::npos);
  std::string human = emit_report(r, "human");
  EXPECT_NE(human.find("1 FAILED"), std::string::npos);
  EXPECT_THROW(emit_report(r, "xml"), std::invalid_argument);
}

TEST(Verifier, JacobiRank3) {
  auto r = jacobi_suite(3);
  ASSERT_FALSE(r.instances.empty());
  for (const auto& rec : r.instances) EXPECT_EQ(rec.status, Status::proved_zero) << rec.payload;
}

TEST(Verifier, JacobiRank4Cases) {
  auto r = jacobi_suite(4);
  std::set<std::string> anchors;
  for (const auto& rec : r.instances) {
    EXPECT_EQ(rec.status, Status::proved_zero) << rec.payload;
    anchors.insert(rec.anchor);
  }
  EXPECT_GE(anchors.size(), 4u);
}

TEST(Verifier, ConfigParsing) {
  auto cfg = parse_config(
      "# generic point\n"
      "c1 = 1/3\nc2 = 1/5\nc3 = 2/7   # trailing comment\nc4 = 1/2\nN = 4\n"
      "window = 10\nsuites = definitions, rank1\nseed = 9\n");
  ASSERT_TRUE(cfg.params.has_value());
  EXPECT_EQ(cfg.params->c3, Rational(2, 7));
  EXPECT_EQ(cfg.params->N, Rational(4));
  EXPECT_EQ(cfg.window, 10);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.suites, (std::vector<std::string>{"definitions", "rank1"}));
  EXPECT_FALSE(parse_config("window = 3\n").params.has_value());
  EXPECT_EQ(parse_suite_list("all"), all_suites());
}

TEST(Verifier, ConfigErrors) {
  EXPECT_THROW(parse_config("c1 = 0.5\nc2=1\nc3=1\nc4=1\nN=3\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("c1 = 1\nN = 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("colour = blue\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("window = ten\n"), std::invalid_argument);
  EXPECT_THROW(parse_config("window\n"), std::invalid_argument);
  EXPECT_THROW(load_config("/nonexistent/params.cfg"), std::invalid_argument);
}

TEST(Verifier, ValidateConfig) {
  EXPECT_NO_THROW(validate_config(small_config({"definitions"})));
  EXPECT_THROW(validate_config(small_config({"bogus"})), std::invalid_argument);
  EXPECT_THROW(validate_config(small_config({"definitions"}, 12)), std::invalid_argument);
  auto cfg = small_config({"definitions"});
  cfg.params = {{"i", {1, 1, 1, 1, 3}, 6}};
  EXPECT_THROW(validate_config(cfg), std::invalid_argument);
}
