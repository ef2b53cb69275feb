#pragma once

#include <cstddef>

#include "stretchalign/aligner.hpp"
#include "stretchalign/cost.hpp"

namespace stretchalign {

enum class Quadrant { I = 1, II = 2, III = 3, IV = 4 };

const char* to_string(Quadrant q);

// Per-sequence stretch metrics: a_i = (L' - Lt) / (L - Lt) and
// b_i = sum over gap runs of 2^(G-1), over L - Lt. The tail length applies
// only to the sequence that carries the tail. b is kept as an exact rational;
// log2_b is derived for display.
struct SequenceMetrics {
  double a = 1.0;
  CostValue b_num;
  std::size_t b_den = 1;
  double log2_b = 0.0;
  bool cost_is_zero = true;
};

struct QuadrantThresholds {
  double a_split = 1.5;
  // Applied to the normalised cost exponent nu, not to b itself.
  double cost_split = 0.5;
};

struct CollectiveMetrics {
  double a = 1.0;  // in [1, 2]
  CostValue b_num;
  std::size_t b_den = 1;
  double log2_b = 0.0;
  bool cost_is_zero = true;
  // log2(1 + total run cost) / (max(L1, L2) - 1): roughly the longest run
  // relative to the sequence length. Drives the quadrant split; 0 when the
  // denominator would vanish.
  double nu = 0.0;
  Quadrant quadrant = Quadrant::I;
};

/// Metrics of one side of an alignment; which is 1 or 2. Throws
/// std::domain_error when L - Lt = 0 leaves the ratios undefined.
SequenceMetrics per_sequence_metrics(const AlignmentResult& r, int which);

/// The collective pair over both sequences. Throws std::domain_error when
/// L1 + L2 - Lt < 1.
CollectiveMetrics collective_metrics(const AlignmentResult& r,
                                     const QuadrantThresholds& thresholds = {});

/// Quadrant of the (a, nu) plane: I similar with scattered short breaks,
/// II similar with long gap series, III long series and sparse matches,
/// IV heavy but scattered single-gap interleaving.
Quadrant classify(const CollectiveMetrics& m, const QuadrantThresholds& thresholds = {});

// Closed theoretical ranges for the metric values at given lengths. Lower
// bounds are always 1 (a) and 0 (b); the upper bounds are listed explicitly,
// b uppers as exact rationals. degenerate flags a vanishing denominator.
struct MetricBounds {
  bool degenerate = false;
  std::size_t a1_max_num = 0, a1_max_den = 0;
  std::size_t a2_max_num = 0, a2_max_den = 0;
  double a_max = 2.0;  // collective stretch ratio is always within [1, 2]
  CostValue b1_max_num;
  std::size_t b1_max_den = 0;
  CostValue b2_max_num;
  std::size_t b2_max_den = 0;
  CostValue b_max_num;
  std::size_t b_max_den = 0;
};

MetricBounds bounds(std::size_t len1, std::size_t len2, std::size_t tail_len);

}  // namespace stretchalign
