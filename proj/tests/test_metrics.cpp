#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "stretchalign/metrics.hpp"
#include "testutil.hpp"

using namespace stretchalign;

namespace {

const Sequence kWorked1{6, 9, 1, 4, 11, 6, 5};
const Sequence kWorked2{3, 1, 9, 6, 7, 4, 12};

AlignerConfig tail_cfg() {
  AlignerConfig cfg;
  cfg.tail_policy = TailPolicy::tail;
  return cfg;
}

}  // namespace

TEST_CASE("identical sequences measure as identity") {
  SplitMix64 rng{41};
  const Sequence s = testutil::random_sequence(rng, 200);
  const AlignmentResult r = align(s, s);
  for (const int which : {1, 2}) {
    const SequenceMetrics m = per_sequence_metrics(r, which);
    CHECK(m.a == 1.0);
    CHECK(m.cost_is_zero);
    CHECK(m.log2_b == 0.0);
  }
  const CollectiveMetrics c = collective_metrics(r);
  CHECK(c.a == 1.0);
  CHECK(c.cost_is_zero);
  CHECK(c.quadrant == Quadrant::I);
}

TEST_CASE("worked example per-sequence metrics under tail policy") {
  const AlignmentResult r = align(kWorked1, kWorked2, tail_cfg());

  const SequenceMetrics m1 = per_sequence_metrics(r, 1);
  CHECK(m1.a == doctest::Approx(11.0 / 6.0).epsilon(1e-12));  // (12-1)/(7-1)
  CHECK(m1.b_num == CostValue{6});                            // 2^0 + 2^0 + 2^2
  CHECK(m1.b_den == 6);
  CHECK(std::abs(m1.log2_b - 0.0) < 0.005);  // b1 = 1

  const SequenceMetrics m2 = per_sequence_metrics(r, 2);
  CHECK(m2.a == doctest::Approx(11.0 / 7.0).epsilon(1e-12));
  CHECK(m2.b_num == CostValue{4});  // 2^1 + 2^1
  CHECK(m2.b_den == 7);
}

TEST_CASE("worked example collective metrics under pad policy") {
  const AlignmentResult r = align(kWorked1, kWorked2);
  const CollectiveMetrics m = collective_metrics(r);
  CHECK(m.a == doctest::Approx(24.0 / 14.0).epsilon(1e-12));
  CHECK(m.b_num == CostValue{11});
  CHECK(m.b_den == 14);
  CHECK(std::abs(m.log2_b - (-0.3479)) < 0.005);
}

TEST_CASE("disjoint alphabets attain the collective maximum") {
  const AlignmentResult r = align(Sequence{1, 2, 3}, Sequence{4, 5, 6});
  const CollectiveMetrics m = collective_metrics(r);
  CHECK(m.a == 2.0);
  CHECK(m.b_num == CostValue{8});  // 2^2 + 2^2
  CHECK(m.b_den == 6);
  CHECK(m.quadrant == Quadrant::III);
}

TEST_CASE("undefined metric when the tail swallows a whole sequence") {
  const AlignmentResult r = align(Sequence{1, 2}, Sequence{}, tail_cfg());
  CHECK(r.tail_length == 2);
  CHECK_THROWS_AS(per_sequence_metrics(r, 1), std::domain_error);
  CHECK_THROWS_AS(collective_metrics(r), std::domain_error);
  CHECK_THROWS_AS(per_sequence_metrics(r, 3), std::invalid_argument);
}

TEST_CASE("bounds carry the closed-form uppers") {
  const MetricBounds b = bounds(5, 5, 0);
  CHECK_FALSE(b.degenerate);
  CHECK(b.a1_max_num == 10);
  CHECK(b.a1_max_den == 5);
  CHECK(b.b1_max_num == CostValue{16});  // 2^(5-1)
  CHECK(b.b1_max_den == 5);
  CHECK(b.b_max_num == CostValue{32});  // 2^4 + 2^4
  CHECK(b.b_max_den == 10);

  const MetricBounds big = bounds(5000, 5000, 0);
  CHECK(big.b_max_num == CostValue::pow2(5000));  // 2^4999 + 2^4999
  CHECK(big.b_max_den == 10000);

  CHECK(bounds(4, 9, 4).degenerate);  // tail swallows sequence 1
  CHECK_THROWS_AS(bounds(0, 3, 0), std::invalid_argument);
}

TEST_CASE("metrics stay inside their bounds on random pairs") {
  SplitMix64 rng{4242};
  for (int trial = 0; trial < 300; ++trial) {
    const Sequence a = testutil::random_sequence(rng, 1 + rng.next() % 80);
    const Sequence b = testutil::random_sequence(rng, 1 + rng.next() % 80);
    AlignerConfig cfg;
    if (trial % 2 == 1) cfg.tail_policy = TailPolicy::tail;
    const AlignmentResult r = align(a, b, cfg);
    const MetricBounds limit = bounds(r.len1, r.len2, r.tail_length);
    const CollectiveMetrics m = collective_metrics(r);
    CHECK(m.a >= 1.0 - 1e-12);
    CHECK(m.a <= 2.0 + 1e-12);
    // exact rational comparison: b <= b_max  <=>  b_num * max_den <= max_num * b_den
    CHECK(m.b_num.times(limit.b_max_den) <= limit.b_max_num.times(m.b_den));
    if (!limit.degenerate) {
      const SequenceMetrics m1 = per_sequence_metrics(r, 1);
      const SequenceMetrics m2 = per_sequence_metrics(r, 2);
      const std::size_t lt1 = r.tail_sequence == 1 ? r.tail_length : 0;
      CHECK((r.stretched_len1 - lt1) * limit.a1_max_den <=
            limit.a1_max_num * (r.len1 - lt1));
      CHECK(r.stretched_len2 * limit.a2_max_den <= limit.a2_max_num * r.len2);
      CHECK(m1.b_num.times(limit.b1_max_den) <= limit.b1_max_num.times(m1.b_den));
      CHECK(m2.b_num.times(limit.b2_max_den) <= limit.b2_max_num.times(m2.b_den));
      // zero cost exactly when nothing stretched
      CHECK((m1.a == 1.0) == m1.cost_is_zero);
      CHECK((m2.a == 1.0) == m2.cost_is_zero);
    }
    CHECK((m.a == 1.0) == m.cost_is_zero);
    // the collective numerator is the sum of the per-sequence numerators
    if (!limit.degenerate) {
      CostValue total = per_sequence_metrics(r, 1).b_num;
      total += per_sequence_metrics(r, 2).b_num;
      CHECK(total == m.b_num);
    }
  }
}

TEST_CASE("quadrant assignment follows the two thresholds") {
  SUBCASE("high stretch with scattered single gaps lands in IV") {
    // rare shared zeros inside otherwise disjoint streams, tight window:
    // nearly everything resolves through two-gap fallbacks
    Sequence s1;
    Sequence s2;
    for (std::size_t k = 0; k < 1000; ++k) {
      s1.push_back(k % 200 == 199 ? 0 : static_cast<Symbol>(1 + k % 7));
      s2.push_back(k % 200 == 199 ? 0 : static_cast<Symbol>(8 + k % 7));
    }
    AlignerConfig cfg;
    cfg.window = 3;
    const AlignmentResult r = align(s1, s2, cfg);
    const CollectiveMetrics m = collective_metrics(r);
    CHECK(m.a >= 1.9);
    CHECK(m.nu < 0.5);
    CHECK(m.quadrant == Quadrant::IV);
  }
  SUBCASE("quadrant depends only on the (a, nu) point") {
    CollectiveMetrics m;
    m.a = 1.2;
    m.nu = 0.1;
    CHECK(classify(m) == Quadrant::I);
    m.nu = 0.7;
    CHECK(classify(m) == Quadrant::II);
    m.a = 1.8;
    CHECK(classify(m) == Quadrant::III);
    m.nu = 0.2;
    CHECK(classify(m) == Quadrant::IV);
    const QuadrantThresholds custom{1.9, 0.25};
    CHECK(classify(m, custom) == Quadrant::I);
  }
  SUBCASE("replicating an experiment keeps the quadrant") {
    for (const std::size_t scale : {std::size_t{10}, std::size_t{40}, std::size_t{160}}) {
      const Sequence a(scale, 1);
      const Sequence b(scale, 2);
      const CollectiveMetrics m = collective_metrics(align(a, b));
      CHECK(m.quadrant == Quadrant::III);
    }
  }
}
