#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stretchalign/aligner.hpp"
#include "stretchalign/metrics.hpp"

namespace stretchalign {

/// Online facade over the aligner: feed the two inputs in arbitrary chunks
/// and inspect the metrics of the already-resolved prefix at any time.
///
/// The engine only takes a step when its outcome is already forced, i.e.
/// when no future chunk could change what the batch aligner would do at that
/// point. A pending mismatch whose forward search has not found its target
/// (and whose window is not exhausted) therefore stays unresolved until more
/// data arrives or finalize() settles it. finalize() yields exactly what
/// align() returns for the concatenated inputs.
///
/// Single-owner type: callers serialise access externally.
class IncrementalAligner {
 public:
  explicit IncrementalAligner(AlignerConfig cfg = {});

  // Append symbols; validates the alphabet. Throws std::logic_error after
  // finalize().
  void push1(std::span<const Symbol> chunk);
  void push2(std::span<const Symbol> chunk);

  struct Snapshot {
    // Metrics over the resolved prefix; a = 1 / zero cost when nothing has
    // been resolved yet.
    CollectiveMetrics metrics;
    std::size_t resolved1 = 0;  // symbols consumed from each input
    std::size_t resolved2 = 0;
    std::size_t unresolved1 = 0;  // buffered symbols still awaiting a decision
    std::size_t unresolved2 = 0;
  };

  Snapshot snapshot() const;

  // Settles everything that was waiting on more data and returns the full
  // alignment. Callable once; further pushes or a second finalize throw.
  AlignmentResult finalize();

 private:
  enum class Step { advanced, blocked };

  Step step(bool final_pass);
  void drain(bool final_pass);
  void emit_matched_block(const OptimizeResult& r);
  void apply_terminal();

  AlignerConfig cfg_;
  Sequence buf1_;
  Sequence buf2_;
  std::size_t k1_ = 0;  // read cursors into the buffers
  std::size_t k2_ = 0;
  StretchedSequence out1_;
  StretchedSequence out2_;
  std::vector<std::pair<std::size_t, std::size_t>> per_call_gaps_;
  std::size_t tail_length_ = 0;
  int tail_sequence_ = 0;
  bool terminal_done_ = false;
  bool finalized_ = false;
  // Forward-search resume point, valid while the cursors are unchanged.
  std::size_t search_k1_ = static_cast<std::size_t>(-1);
  std::size_t search_k2_ = static_cast<std::size_t>(-1);
  std::size_t search_next_ = 0;
};

}  // namespace stretchalign
