#include <stdexcept>

#include "doctest.h"
#include "stretchalign/harness.hpp"
#include "testutil.hpp"

using namespace stretchalign;

TEST_CASE("oracle scores the worked segment") {
  const Sequence s1{6, 9, 1, 4, 11, 6, 5};
  const Sequence s2{3, 1, 9, 6, 7, 4, 12};
  const OptimizeResult r = oracle_optimize(SegmentPair{s1, s2});
  REQUIRE(r.matched());
  CHECK(r.cost == CostValue{3});
  CHECK(r.i == 2);
  CHECK(r.j == 1);
}

TEST_CASE("oracle on a reversed anti-diagonal") {
  // distinct symbols, s2 reversed: matches lie on (i, n-1-i); the cheapest
  // sits at the centre
  const Sequence s1{1, 2, 3, 4, 5};
  const Sequence s2{5, 4, 3, 2, 1};
  const OptimizeResult r = oracle_optimize(SegmentPair{s1, s2});
  REQUIRE(r.matched());
  CHECK(r.i == 2);
  CHECK(r.j == 2);
  CHECK(r.cost == CostValue{4});  // 2^1 + 2^1
}

TEST_CASE("oracle reports no match correctly") {
  const Sequence s1{1, 2};
  const Sequence s2{8, 9};
  const OptimizeResult r = oracle_optimize(SegmentPair{s1, s2});
  CHECK_FALSE(r.matched());
  CHECK(r.gaps_into_s1 == 2);
  CHECK(r.tail_in_s1 == 2);
  CHECK_THROWS_AS(oracle_optimize(SegmentPair{Sequence{}, s2}), std::invalid_argument);
}

TEST_CASE("run_all_pairs covers the full ordered square") {
  SplitMix64 rng{606};
  std::vector<std::pair<std::string, Sequence>> inputs;
  for (int k = 0; k < 3; ++k) {
    inputs.emplace_back("seq" + std::to_string(k), testutil::random_sequence(rng, 40));
  }
  const std::vector<PairResult> results = run_all_pairs(inputs);
  REQUIRE(results.size() == 9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const PairResult& p = results[i * 3 + j];
      CHECK(p.row.id1 == inputs[i].first);
      CHECK(p.row.id2 == inputs[j].first);
      if (i == j) {
        CHECK(p.row.a == 1.0);
        CHECK(p.row.cost_is_zero);
      }
    }
  }
  const std::vector<PairResult> single =
      run_all_pairs({{"only", testutil::random_sequence(rng, 10)}});
  CHECK(single.size() == 1);
}

TEST_CASE("run_all_pairs is schedule independent") {
  SplitMix64 rng{607};
  std::vector<std::pair<std::string, Sequence>> inputs;
  for (int k = 0; k < 4; ++k) {
    inputs.emplace_back("f" + std::to_string(k), testutil::random_sequence(rng, 64));
  }
  const auto serial = run_all_pairs(inputs, {}, 1);
  const auto parallel = run_all_pairs(inputs, {}, 3);
  REQUIRE(serial.size() == parallel.size());
  std::vector<ResultRow> rows_a;
  std::vector<ResultRow> rows_b;
  for (const auto& p : serial) rows_a.push_back(p.row);
  for (const auto& p : parallel) rows_b.push_back(p.row);
  CHECK(write_csv(rows_a) == write_csv(rows_b));
}

TEST_CASE("run_all_pairs validates inputs") {
  CHECK_THROWS_AS(run_all_pairs({}), std::invalid_argument);
  CHECK_THROWS_AS(run_all_pairs({{"empty", Sequence{}}}), std::invalid_argument);
}

TEST_CASE("insertion experiment rows all pass") {
  const std::vector<Table1Row> rows = table1_experiment(123);
  REQUIRE(rows.size() == 7);
  for (const Table1Row& row : rows) {
    CAPTURE(row.insertions);
    CHECK(row.pass);
  }
  CHECK(rows[0].pair.collective.cost_is_zero);
  CHECK(rows[1].pair.collective.a == 1.02);
  // two runs of the insertion length, nothing else
  CHECK(rows[1].pair.row.runs1 == 1);
  CHECK(rows[1].pair.row.runs2 == 1);
  CHECK(rows[1].pair.row.longest_run == 100);
  // and the CSV rendering of that row
  const std::string csv = write_csv({rows[1].pair.row});
  CHECK(csv.find(",1.0200,86.71,false,") != std::string::npos);
}
