#include "stretchalign/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace stretchalign {

namespace {

CostValue total_run_cost(const std::vector<GapRun>& runs) {
  CostValue sum;
  for (const GapRun& r : runs) sum.add_pow2(r.length - 1);
  return sum;
}

}  // namespace

const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::I:
      return "I";
    case Quadrant::II:
      return "II";
    case Quadrant::III:
      return "III";
    case Quadrant::IV:
      return "IV";
  }
  return "?";
}

SequenceMetrics per_sequence_metrics(const AlignmentResult& r, int which) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("per_sequence_metrics: which must be 1 or 2");
  }
  const bool first = which == 1;
  const std::size_t len = first ? r.len1 : r.len2;
  const std::size_t stretched = first ? r.stretched_len1 : r.stretched_len2;
  const std::size_t tail = r.tail_sequence == which ? r.tail_length : 0;
  const std::size_t den = len - tail;
  if (den == 0) {
    throw std::domain_error("per_sequence_metrics: undefined when L - Lt = 0");
  }
  SequenceMetrics m;
  m.a = static_cast<double>(stretched - tail) / static_cast<double>(den);
  m.b_num = total_run_cost(first ? r.runs1 : r.runs2);
  m.b_den = den;
  m.cost_is_zero = m.b_num.is_zero();
  m.log2_b = cost_log2(m.b_num, den);
  return m;
}

CollectiveMetrics collective_metrics(const AlignmentResult& r,
                                     const QuadrantThresholds& thresholds) {
  const std::size_t tail = r.tail_length;
  const std::size_t den = r.len1 + r.len2 - tail;
  if (den < 1) throw std::domain_error("collective_metrics: empty alignment");

  CollectiveMetrics m;
  m.a = static_cast<double>(r.stretched_len1 + r.stretched_len2 - tail) /
        static_cast<double>(den);
  m.b_num = total_run_cost(r.runs1);
  m.b_num += total_run_cost(r.runs2);
  m.b_den = den;
  m.cost_is_zero = m.b_num.is_zero();
  m.log2_b = cost_log2(m.b_num, den);
  const std::size_t longest_side = std::max(r.len1, r.len2);
  if (longest_side >= 2) {
    CostValue shifted = m.b_num;
    shifted.add_pow2(0);
    m.nu = shifted.log2() / static_cast<double>(longest_side - 1);
  }
  m.quadrant = classify(m, thresholds);
  return m;
}

Quadrant classify(const CollectiveMetrics& m, const QuadrantThresholds& thresholds) {
  if (m.a < thresholds.a_split) {
    return m.nu < thresholds.cost_split ? Quadrant::I : Quadrant::II;
  }
  return m.nu < thresholds.cost_split ? Quadrant::IV : Quadrant::III;
}

MetricBounds bounds(std::size_t len1, std::size_t len2, std::size_t tail_len) {
  if (len1 < 1 || len2 < 1) throw std::invalid_argument("bounds: lengths must be >= 1");
  MetricBounds b;
  b.degenerate = tail_len >= len1 || tail_len >= len2;
  if (tail_len < len1) {
    b.a1_max_num = len1 + len2 - tail_len;
    b.a1_max_den = len1 - tail_len;
    b.b1_max_num = CostValue::pow2(len2 - 1);
    b.b1_max_den = len1 - tail_len;
  }
  if (tail_len < len2) {
    b.a2_max_num = len1 + len2 - tail_len;
    b.a2_max_den = len2 - tail_len;
    b.b2_max_num = CostValue::pow2(len1 - 1);
    b.b2_max_den = len2 - tail_len;
  }
  if (len1 + len2 > tail_len) {
    b.b_max_num = CostValue::pow2(len1 - 1);
    b.b_max_num += CostValue::pow2(len2 - 1);
    b.b_max_den = len1 + len2 - tail_len;
  }
  return b;
}

}  // namespace stretchalign
