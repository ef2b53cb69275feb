#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stretchalign/gap_optimizer.hpp"
#include "stretchalign/types.hpp"

namespace stretchalign {

// What happens to leftovers once one input runs out of partners. pad keeps
// both outputs the same length and counts the trailing gap runs in the cost;
// tail appends sequence 1's leftover unpaired and excludes it from metrics.
enum class TailPolicy { pad, tail };

inline constexpr std::size_t kUnlimitedWindow = static_cast<std::size_t>(-1);

struct AlignerConfig {
  // Maximum forward-search distance for a re-match candidate.
  std::size_t window = kUnlimitedWindow;
  CostMode cost_mode = CostMode::exact;
  TailPolicy tail_policy = TailPolicy::pad;
  std::size_t alphabet_size = kDefaultAlphabetSize;
};

struct AlignmentResult {
  StretchedSequence stretched1;
  StretchedSequence stretched2;
  std::size_t len1 = 0;  // original lengths
  std::size_t len2 = 0;
  std::size_t stretched_len1 = 0;
  std::size_t stretched_len2 = 0;
  std::size_t tail_length = 0;  // 0 under pad policy
  int tail_sequence = 0;        // 1 when stretched1 carries a tail, else 0
  std::vector<GapRun> runs1;    // maximal runs of the final outputs
  std::vector<GapRun> runs2;
  // (gaps into s1, gaps into s2) for every emitted block, in order.
  std::vector<std::pair<std::size_t, std::size_t>> per_call_gaps;
  TailPolicy tail_policy = TailPolicy::pad;
};

/// Smallest p > from with s[p] == target, scanning at most window positions.
std::optional<std::size_t> find_forward_match(const Sequence& s, std::size_t from,
                                              Symbol target, std::size_t window);

// Cells appended once no cross-match remains between the leftovers.
struct TerminalBlock {
  std::vector<AlignedCell> cells1;
  std::vector<AlignedCell> cells2;
  std::size_t tail_length = 0;
};

/// pad: rest1's symbols face new gaps in sequence 2, then rest2's symbols
/// face new gaps in sequence 1. tail: rest2's symbols face gaps in sequence 1
/// and rest1 is appended unpaired as the tail, with no cells added to
/// sequence 2 for it.
TerminalBlock terminal_block(std::span<const Symbol> rest1, std::span<const Symbol> rest2,
                             TailPolicy policy);

/// Mutual alignment of two sequences: paired symbols where they match, gap
/// cells opposite everything that does not. Deterministic for fixed inputs
/// and configuration. Throws std::invalid_argument on alphabet violations.
AlignmentResult align(const Sequence& s1, const Sequence& s2, const AlignerConfig& cfg = {});

}  // namespace stretchalign
