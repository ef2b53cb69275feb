#include <span>
#include <stdexcept>

#include "doctest.h"
#include "stretchalign/incremental.hpp"
#include "testutil.hpp"

using namespace stretchalign;

namespace {

bool same_alignment(const AlignmentResult& a, const AlignmentResult& b) {
  return a.stretched1 == b.stretched1 && a.stretched2 == b.stretched2 &&
         a.len1 == b.len1 && a.len2 == b.len2 && a.tail_length == b.tail_length &&
         a.tail_sequence == b.tail_sequence && a.runs1 == b.runs1 && a.runs2 == b.runs2 &&
         a.per_call_gaps == b.per_call_gaps;
}

// Pushes the two inputs in randomly interleaved random-size chunks.
AlignmentResult chunked_align(const Sequence& a, const Sequence& b, const AlignerConfig& cfg,
                              SplitMix64& rng, bool with_snapshots) {
  IncrementalAligner inc(cfg);
  std::size_t done1 = 0;
  std::size_t done2 = 0;
  while (done1 < a.size() || done2 < b.size()) {
    const bool feed_first = done2 == b.size() || (done1 < a.size() && rng.next() % 2 == 0);
    if (feed_first) {
      const std::size_t n = std::min<std::size_t>(1 + rng.next() % 7, a.size() - done1);
      inc.push1(std::span<const Symbol>(a).subspan(done1, n));
      done1 += n;
    } else {
      const std::size_t n = std::min<std::size_t>(1 + rng.next() % 7, b.size() - done2);
      inc.push2(std::span<const Symbol>(b).subspan(done2, n));
      done2 += n;
    }
    if (with_snapshots && rng.next() % 4 == 0) {
      const auto snap = inc.snapshot();
      CHECK(snap.resolved1 + snap.unresolved1 == done1);
      CHECK(snap.resolved2 + snap.unresolved2 == done2);
    }
  }
  return inc.finalize();
}

}  // namespace

TEST_CASE("single push of everything equals batch align") {
  SplitMix64 rng{21};
  for (int trial = 0; trial < 20; ++trial) {
    const Sequence a = testutil::random_sequence(rng, 1 + rng.next() % 80);
    const Sequence b = testutil::random_sequence(rng, 1 + rng.next() % 80);
    IncrementalAligner inc;
    inc.push1(a);
    inc.push2(b);
    CHECK(same_alignment(inc.finalize(), align(a, b)));
  }
}

TEST_CASE("chunked pushes resolve to the batch result bit-exactly") {
  SplitMix64 rng{22};
  for (int trial = 0; trial < 60; ++trial) {
    const Sequence a = testutil::random_sequence(rng, rng.next() % 120);
    const Sequence b = testutil::random_sequence(rng, rng.next() % 120);
    AlignerConfig cfg;
    if (trial % 3 == 1) cfg.tail_policy = TailPolicy::tail;
    if (trial % 4 == 2) cfg.window = 1 + rng.next() % 8;
    const AlignmentResult batch = align(a, b, cfg);
    const AlignmentResult streamed = chunked_align(a, b, cfg, rng, true);
    CHECK(same_alignment(batch, streamed));
  }
}

TEST_CASE("identical streams stay fully resolved with zero cost") {
  IncrementalAligner inc;
  SplitMix64 rng{23};
  const Sequence data = testutil::random_sequence(rng, 64);
  for (std::size_t k = 0; k < data.size(); ++k) {
    inc.push1(std::span<const Symbol>(&data[k], 1));
    inc.push2(std::span<const Symbol>(&data[k], 1));
    const auto snap = inc.snapshot();
    CHECK(snap.metrics.a == 1.0);
    CHECK(snap.metrics.cost_is_zero);
    CHECK(snap.unresolved1 == 0);
    CHECK(snap.unresolved2 == 0);
  }
}

TEST_CASE("a pending mismatch stays unresolved until data or finalize") {
  IncrementalAligner inc;
  inc.push1(Sequence{1, 2, 3});
  inc.push2(Sequence{9});
  // 1 vs 9 cannot be settled: 9 might appear later in stream 1
  auto snap = inc.snapshot();
  CHECK(snap.resolved1 == 0);
  CHECK(snap.unresolved1 == 3);
  CHECK(snap.unresolved2 == 1);
  // the arrival of 9 settles the head as a gapped block
  inc.push1(Sequence{9, 4});
  inc.push2(Sequence{4});
  const AlignmentResult r = inc.finalize();
  CHECK(same_alignment(r, align(Sequence{1, 2, 3, 9, 4}, Sequence{9, 4})));
}

TEST_CASE("lagging stream keeps the unresolved suffix to the lag") {
  IncrementalAligner inc;
  SplitMix64 rng{24};
  const Sequence data = testutil::random_sequence(rng, 40);
  inc.push1(std::span<const Symbol>(&data[0], 1));
  for (std::size_t k = 1; k < data.size(); ++k) {
    inc.push1(std::span<const Symbol>(&data[k], 1));
    inc.push2(std::span<const Symbol>(&data[k - 1], 1));
    const auto snap = inc.snapshot();
    CHECK(snap.unresolved1 <= 2);  // at most the lag plus the undecidable head
    CHECK(snap.unresolved2 <= 1);
  }
}

TEST_CASE("use after finalize is rejected") {
  IncrementalAligner inc;
  inc.push1(Sequence{1});
  inc.push2(Sequence{1});
  (void)inc.finalize();
  CHECK_THROWS_AS(inc.push1(Sequence{2}), std::logic_error);
  CHECK_THROWS_AS(inc.push2(Sequence{2}), std::logic_error);
  CHECK_THROWS_AS((void)inc.snapshot(), std::logic_error);
  CHECK_THROWS_AS((void)inc.finalize(), std::logic_error);
}

TEST_CASE("empty snapshot reports identity metrics") {
  IncrementalAligner inc;
  const auto snap = inc.snapshot();
  CHECK(snap.metrics.a == 1.0);
  CHECK(snap.metrics.cost_is_zero);
  CHECK(snap.resolved1 == 0);
  CHECK(snap.resolved2 == 0);
}
