#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "stretchalign/cost.hpp"
#include "stretchalign/types.hpp"

namespace stretchalign {

// How candidate costs are compared during the search. exact keeps full
// big-integer costs and guarantees the minimum; exponent_only replaces the
// comparison with the index-sum tests (see prune_improves) and trades
// optimality for word-sized arithmetic.
enum class CostMode { exact, exponent_only };

// A mismatch segment handed to the gapping optimizer. Both slices view the
// caller's sequences and must be non-empty.
struct SegmentPair {
  std::span<const Symbol> s1;
  std::span<const Symbol> s2;
};

struct OptimizeResult {
  enum class Kind { matched, no_match };

  Kind kind = Kind::no_match;

  // matched: s1[i] == s2[j]. j gaps go into s1 (facing s2's unmatched prefix)
  // and i gaps into s2, so both gapped prefixes end up i + j cells long.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t gaps_into_s1 = 0;  // matched: j.  no_match: all of s2, a run of J.
  std::size_t gaps_into_s2 = 0;  // matched: i.  no_match: 0.
  std::size_t tail_in_s1 = 0;    // no_match: I, s1's symbols stay for the caller.

  // run_cost(i) + run_cost(j) when matched; zero otherwise.
  CostValue cost;

  bool matched() const { return kind == Kind::matched; }
};

/// Finds the cheapest match pair inside a mismatch segment.
///
/// In exact mode the result minimises run_cost(i) + run_cost(j) over all
/// pairs with s1[i] == s2[j]; ties prefer the larger i, then the smaller j.
/// If the segments share no symbol at all, returns a no_match result. In
/// exponent_only mode candidates are screened with prune_improves instead of
/// exact comparison: the result is always a valid match pair (or the same
/// no_match), but not necessarily the cheapest.
///
/// Throws std::invalid_argument on an empty segment.
OptimizeResult optimize_segment(const SegmentPair& seg, CostMode mode = CostMode::exact);

/// All index pairs with max(i, j) == a and both sides in range, in scan
/// order: down the column (0,a)..(min(a,I-1),a), then back along the row
/// from (a, min(a,J-1) - [a<J]) to (a, 0). Requires 1 <= a < max(I, J).
std::vector<std::pair<std::size_t, std::size_t>> frontier_candidates(const SegmentPair& seg,
                                                                     std::size_t a);

/// Exponent-only acceptance test: i + a < 2(c - 1), where c bounds the
/// incumbent cost by MC <= 2^c. Row candidates pass their j as i.
bool prune_improves(std::size_t i, std::size_t a, std::size_t c);

/// Smallest a with run_cost(a) >= mc. Every candidate on frontier a costs at
/// least run_cost(a), so the scan can stop once it has processed this
/// frontier without losing the exact minimum or a tie. Requires mc > 0.
std::size_t termination_bound(const CostValue& mc);

}  // namespace stretchalign
