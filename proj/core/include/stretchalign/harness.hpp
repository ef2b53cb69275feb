#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stretchalign/aligner.hpp"
#include "stretchalign/gap_optimizer.hpp"
#include "stretchalign/io.hpp"
#include "stretchalign/metrics.hpp"

namespace stretchalign {

struct PairResult {
  ResultRow row;
  CollectiveMetrics collective;
  SequenceMetrics seq1;
  SequenceMetrics seq2;
};

/// Exhaustive reference for the optimizer's exact mode: scores every pair
/// with s1[i] == s2[j] using exact integer costs and applies the same
/// larger-i-then-smaller-j tie break. Quadratic in the segment lengths;
/// intended for validation, not production paths.
OptimizeResult oracle_optimize(const SegmentPair& seg);

/// Aligns the pair and bundles every metric the reporting layer needs.
PairResult compare_pair(std::string id1, std::string id2, const Sequence& a,
                        const Sequence& b, const AlignerConfig& cfg = {});

/// Every ordered pair of the inputs, self-pairs included: n inputs give n^2
/// results. Jobs may run on several worker threads; the output order is by
/// input index and does not depend on scheduling. Inputs must be non-empty.
std::vector<PairResult> run_all_pairs(
    const std::vector<std::pair<std::string, Sequence>>& inputs,
    const AlignerConfig& cfg = {}, std::size_t threads = 1);

struct Table1Row {
  std::size_t insertions = 0;
  double expected_a = 1.0;
  double expected_log2_b = 0.0;
  bool expect_zero_cost = false;
  PairResult pair;
  bool pass = false;
};

/// The insertion experiment: a 4-bit Gauss(2,1) host of length 5000 that
/// avoids the marker symbol 7 (offending draws are redrawn), compared under
/// pad policy against copies corrupted with a front block of 7s and truncated
/// back to 5000, for block sizes 0, 100, 500, 1000, 2000, 3000 and 4000.
/// Each row checks a = 1 + INS/5000 exactly and log2(b) = INS - log2(10000)
/// within 0.01; the checks hold for any seed by construction.
std::vector<Table1Row> table1_experiment(std::uint64_t seed = 1);

}  // namespace stretchalign
