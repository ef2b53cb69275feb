#include "stretchalign/gap_optimizer.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace stretchalign {

namespace {

// Single source of the frontier enumeration, shared by the public
// frontier_candidates and the scan in optimize_segment.
template <typename Fn>
void for_each_frontier(std::size_t len1, std::size_t len2, std::size_t a, Fn&& fn) {
  if (a < len2) {
    const std::size_t top = std::min(a, len1 - 1);
    for (std::size_t i = 0; i <= top; ++i) fn(i, a);
  }
  if (a < len1) {
    // When a < len2 the diagonal (a, a) was already visited above.
    const std::size_t j_end = a < len2 ? a : len2;
    for (std::size_t j = j_end; j-- > 0;) fn(a, j);
  }
}

OptimizeResult make_matched(std::size_t i, std::size_t j, CostValue cost) {
  OptimizeResult r;
  r.kind = OptimizeResult::Kind::matched;
  r.i = i;
  r.j = j;
  r.gaps_into_s1 = j;
  r.gaps_into_s2 = i;
  r.cost = std::move(cost);
  return r;
}

OptimizeResult make_no_match(std::size_t len1, std::size_t len2) {
  OptimizeResult r;
  r.kind = OptimizeResult::Kind::no_match;
  r.gaps_into_s1 = len2;
  r.tail_in_s1 = len1;
  return r;
}

}  // namespace

OptimizeResult optimize_segment(const SegmentPair& seg, CostMode mode) {
  const std::span<const Symbol> s1 = seg.s1;
  const std::span<const Symbol> s2 = seg.s2;
  const std::size_t len1 = s1.size();
  const std::size_t len2 = s2.size();
  if (len1 == 0 || len2 == 0) {
    throw std::invalid_argument("optimize_segment: empty segment");
  }

  // A zero-cost match is unbeatable.
  if (s1[0] == s2[0]) return make_matched(0, 0, CostValue{});

  const std::size_t frontier_end = std::max(len1, len2) - 1;

  bool have = false;
  std::size_t best_i = 0;
  std::size_t best_j = 0;

  if (mode == CostMode::exact) {
    CostValue best_cost;
    std::size_t stop = frontier_end;
    // The caller's forward search usually guarantees s1[I-1] == s2[0]; seed
    // the scan with that pair so the cost ceiling is in place from the start.
    if (len1 >= 2 && s1[len1 - 1] == s2[0]) {
      have = true;
      best_i = len1 - 1;
      best_j = 0;
      best_cost = run_cost(len1 - 1);
      stop = std::min(stop, termination_bound(best_cost));
    }
    for (std::size_t a = 1; a <= stop; ++a) {
      for_each_frontier(len1, len2, a, [&](std::size_t i, std::size_t j) {
        if (s1[i] != s2[j]) return;
        CostValue cost = run_cost(i) + run_cost(j);
        const bool better =
            !have || cost < best_cost ||
            (cost == best_cost && (i > best_i || (i == best_i && j < best_j)));
        if (!better) return;
        have = true;
        best_i = i;
        best_j = j;
        best_cost = std::move(cost);
        stop = std::min(stop, termination_bound(best_cost));
      });
    }
    if (!have) return make_no_match(len1, len2);
    return make_matched(best_i, best_j, std::move(best_cost));
  }

  // exponent_only: track just the cost exponent c with MC <= 2^c.
  std::size_t c = 0;
  const auto update_exponent = [&](std::size_t i, std::size_t j) {
    const std::size_t hi = std::max(i, j);
    c = std::min(i, j) >= 1 ? hi : hi - 1;  // 2^(i-1) + 2^(j-1) <= 2^c
  };
  if (len1 >= 2 && s1[len1 - 1] == s2[0]) {
    have = true;
    best_i = len1 - 1;
    best_j = 0;
    update_exponent(best_i, best_j);
  }
  for (std::size_t a = 1; a <= frontier_end; ++a) {
    // The cheapest conceivable candidate on this frontier has the other
    // index at 0, so once a itself fails the test nothing further can pass.
    if (have && !prune_improves(0, a, c)) break;
    for_each_frontier(len1, len2, a, [&](std::size_t i, std::size_t j) {
      if (s1[i] != s2[j]) return;
      if (have && !prune_improves(std::min(i, j), a, c)) return;
      have = true;
      best_i = i;
      best_j = j;
      update_exponent(i, j);
    });
  }
  if (!have) return make_no_match(len1, len2);
  return make_matched(best_i, best_j, run_cost(best_i) + run_cost(best_j));
}

std::vector<std::pair<std::size_t, std::size_t>> frontier_candidates(const SegmentPair& seg,
                                                                     std::size_t a) {
  const std::size_t len1 = seg.s1.size();
  const std::size_t len2 = seg.s2.size();
  if (len1 == 0 || len2 == 0) {
    throw std::invalid_argument("frontier_candidates: empty segment");
  }
  if (a < 1 || a >= std::max(len1, len2)) {
    throw std::invalid_argument("frontier_candidates: a out of range");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for_each_frontier(len1, len2, a,
                    [&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
  return out;
}

bool prune_improves(std::size_t i, std::size_t a, std::size_t c) {
  return static_cast<std::int64_t>(i + a) < 2 * (static_cast<std::int64_t>(c) - 1);
}

std::size_t termination_bound(const CostValue& mc) {
  if (mc.is_zero()) throw std::invalid_argument("termination_bound: zero cost");
  const std::size_t n = mc.bit_length();
  return mc.single_bit() ? n : n + 1;
}

}  // namespace stretchalign
