#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specht/verify.hpp"

using namespace specht;

namespace {

const FieldSpec Q(0), GF2(2), GF3(3);

std::string zero_timing(SweepResult result) {
  result.millis = 0;
  for (auto& r : result.reports) r.millis = 0;
  return result.to_json().dump();
}

}  // namespace

TEST_CASE("E_n scalar") {
  auto report = verify_en_scalar(Partition({6, 1, 1, 1}), GF2);
  CHECK(report.status() == Status::pass);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].computed == 1);
  auto q = verify_en_scalar(Partition({3, 1}), Q);
  CHECK(q.checks[0].computed == "2");
}

TEST_CASE("lemma tableaux") {
  auto r = restriction_lemma_tableaux(Partition({2, 1}));
  CHECK(r.source.to_string() == "1 2 / 3");
  CHECK(r.chosen == std::vector<int>{2});
  CHECK(r.target.to_string() == "1 3 / 2");
  auto i = induction_lemma_tableaux(Partition({1}));
  CHECK(i.source.to_string() == "1 / 2");
  CHECK(i.target.to_string() == "2 / 1");
  // Every chosen symbol is distinct and the target is a tableau of lambda.
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto t = restriction_lemma_tableaux(lambda);
      CHECK(t.chosen.size() == static_cast<std::size_t>(lambda.distinct_parts() - 1));
      CHECK(t.target.shape() == lambda);
      auto u = induction_lemma_tableaux(lambda);
      CHECK(u.chosen.size() == static_cast<std::size_t>(lambda.distinct_parts()));
      CHECK(u.target.shape() == u.source.shape());
    }
}

TEST_CASE("verifiers pass on small cases") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (auto field : {Q, GF2, GF3})
        for (auto d : {Direction::restrict, Direction::induce}) {
          CHECK(verify_min_poly(lambda, field, d).status() == Status::pass);
          auto coeff = d == Direction::restrict ? verify_coefficient_restriction(lambda, field)
                                                : verify_coefficient_induction(lambda, field);
          CHECK(coeff.status() == Status::pass);
        }
  CHECK(verify_poly_transfer(Partition({3, 1}), GF3, 5).status() == Status::pass);
  CHECK(verify_blocks(Partition({3, 2}), Q, Direction::restrict).status() == Status::pass);
  CHECK(verify_branching(Partition({3, 2}), 3, Direction::induce).status() == Status::pass);
  CHECK_THROWS(verify_branching(Partition({3, 2}), 0, Direction::induce));
  CHECK(verify_decompose(Partition({2, 1}), Q, Direction::restrict).status() == Status::pass);
}

TEST_CASE("report JSON schema") {
  auto report = verify_min_poly(Partition({2, 1}), GF3, Direction::induce);
  auto json = report.to_json();
  for (const char* key : {"verifier", "case", "field", "direction", "checks", "seed", "millis", "status"})
    CHECK(json.contains(key));
  CHECK(json["case"] == "2,1");
  CHECK(json["field"] == "GF(3)");
  CHECK(json["direction"] == "induce");
  CHECK(json["status"] == "pass");
  for (const auto& c : json["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c["pass"].is_boolean());
  }
  CHECK(verify_en_scalar(Partition({3}), GF3).to_json()["checks"][0]["computed"].is_number_integer());
  CHECK(verify_en_scalar(Partition({3}), Q).to_json()["checks"][0]["computed"].is_string());
  CHECK(report.summary_line().rfind("PASS", 0) == 0);
}

TEST_CASE("status logic") {
  VerificationReport r;
  r.add("a", 1, 1);
  CHECK(r.status() == Status::pass);
  r.add("b", 1, 2);
  r.last().outside_hypothesis = true;
  CHECK(r.status() == Status::expected_fail);
  CHECK(r.to_json()["checks"][1]["outside_hypothesis"] == true);
  r.add("c", 1, 2);
  CHECK(r.status() == Status::fail);
  CHECK(to_string(Status::expected_fail) == "expected-fail");
}

TEST_CASE("characteristic 2 cases") {
  CHECK(is_known_char2_counterexample(Partition({6, 1, 1, 1}), Direction::restrict));
  CHECK(is_known_char2_counterexample(Partition({6, 1, 1}), Direction::induce));
  CHECK_FALSE(is_known_char2_counterexample(Partition({6, 1, 1}), Direction::restrict));
  auto r = verify_branching(Partition({6, 1, 1, 1}), 2, Direction::restrict);
  CHECK(r.status() == Status::expected_fail);
  auto counter = run_char2_counterexamples();
  CHECK(counter.status() == Status::pass);
  CHECK(counter.checks.size() == 9);
}

TEST_CASE("sweeps") {
  SweepOptions options;
  options.n_max = 4;
  auto result = sweep(options);
  CHECK_FALSE(result.any_fail());
  CHECK(result.count(Status::pass) == result.reports.size());
  auto json = result.to_json();
  CHECK(json["summary"]["total"] == result.reports.size());
  CHECK(json["summary"]["fail"] == 0);

  // Identical up to timing.
  CHECK(zero_timing(sweep(options)) == zero_timing(result));

  options.n_max = sweep_guardrail + 1;
  CHECK_THROWS_AS(sweep(options), std::invalid_argument);

  SweepOptions one;
  one.n_max = 9;
  one.only = Partition({6, 1, 1, 1});
  one.fields = {GF2};
  one.directions = {Direction::restrict};
  std::size_t seen = 0;
  one.progress = [&](const VerificationReport&) { ++seen; };
  auto single = sweep(one);
  CHECK(seen == single.reports.size());
  CHECK(single.count(Status::expected_fail) == 1);
  CHECK_FALSE(single.any_fail());
}
