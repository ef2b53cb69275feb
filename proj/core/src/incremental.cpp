#include "stretchalign/incremental.hpp"

#include <algorithm>
#include <stdexcept>

namespace stretchalign {

namespace {
constexpr std::size_t kNoCursor = static_cast<std::size_t>(-1);
}

IncrementalAligner::IncrementalAligner(AlignerConfig cfg) : cfg_(cfg) {
  if (cfg_.window != kUnlimitedWindow && cfg_.window < 1) {
    throw std::invalid_argument("aligner window must be at least 1");
  }
  if (cfg_.alphabet_size == 0 || cfg_.alphabet_size > kMaxAlphabetSize) {
    throw std::invalid_argument("invalid alphabet size");
  }
}

void IncrementalAligner::push1(std::span<const Symbol> chunk) {
  if (finalized_) throw std::logic_error("push1 after finalize");
  validate_alphabet(chunk, cfg_.alphabet_size, buf1_.size());
  buf1_.insert(buf1_.end(), chunk.begin(), chunk.end());
  drain(false);
}

void IncrementalAligner::push2(std::span<const Symbol> chunk) {
  if (finalized_) throw std::logic_error("push2 after finalize");
  validate_alphabet(chunk, cfg_.alphabet_size, buf2_.size());
  buf2_.insert(buf2_.end(), chunk.begin(), chunk.end());
  drain(false);
}

void IncrementalAligner::drain(bool final_pass) {
  while (step(final_pass) == Step::advanced) {
  }
}

IncrementalAligner::Step IncrementalAligner::step(bool final_pass) {
  if (terminal_done_) return Step::blocked;

  const bool have1 = k1_ < buf1_.size();
  const bool have2 = k2_ < buf2_.size();
  if (!have1 || !have2) {
    // One side is out of buffered symbols. Only the final pass knows whether
    // that is the true end of the input.
    if (!final_pass) return Step::blocked;
    apply_terminal();
    return Step::advanced;
  }

  if (buf1_[k1_] == buf2_[k2_]) {
    out1_.cells.push_back(AlignedCell::symbol_cell(buf1_[k1_]));
    out2_.cells.push_back(AlignedCell::symbol_cell(buf2_[k2_]));
    ++k1_;
    ++k2_;
    search_k1_ = kNoCursor;
    return Step::advanced;
  }

  // Mismatch: search sequence 1 forward for the current symbol of sequence 2.
  const Symbol target = buf2_[k2_];
  const std::size_t last = buf1_.size() - 1;
  const bool windowed = cfg_.window != kUnlimitedWindow;
  // The window ends inside the buffer iff a NotFound verdict is already final.
  const bool window_confined = windowed && cfg_.window <= last - k1_;
  const std::size_t scan_last = window_confined ? k1_ + cfg_.window : last;

  std::size_t scan_from = k1_ + 1;
  if (search_k1_ == k1_ && search_k2_ == k2_) {
    scan_from = std::max(scan_from, search_next_);
  }
  std::size_t p = kNoCursor;
  for (std::size_t q = scan_from; q <= scan_last; ++q) {
    if (buf1_[q] == target) {
      p = q;
      break;
    }
  }

  if (p != kNoCursor) {
    // Non-critical segment: s1 = S1[k1..p], s2 = S2[k2..k2+(p-k1)] truncated
    // to what exists. Truncation depends on the final length of sequence 2.
    const std::size_t nominal_end2 = k2_ + (p - k1_);
    if (!final_pass && nominal_end2 >= buf2_.size()) {
      search_k1_ = k1_;
      search_k2_ = k2_;
      search_next_ = p;  // keep the found position; rescanning is wasted work
      return Step::blocked;
    }
    const std::size_t end2 = std::min(nominal_end2, buf2_.size() - 1);
    const SegmentPair seg{std::span<const Symbol>(buf1_).subspan(k1_, p - k1_ + 1),
                          std::span<const Symbol>(buf2_).subspan(k2_, end2 - k2_ + 1)};
    // s1 ends with the forward match of s2[0], so a pair always exists here.
    emit_matched_block(optimize_segment(seg, cfg_.cost_mode));
    return Step::advanced;
  }

  // No forward match in reach.
  search_k1_ = k1_;
  search_k2_ = k2_;
  search_next_ = scan_last + 1;
  if (!final_pass) {
    if (!window_confined) return Step::blocked;  // target may still arrive
    // The critical segment is capped at the window on both sides; its
    // sequence-2 slice must be fully buffered to be final-independent.
    if (cfg_.window >= buf2_.size() - k2_) return Step::blocked;
  }

  const std::size_t end1 = window_confined ? k1_ + cfg_.window : buf1_.size() - 1;
  const std::size_t end2 = (windowed && cfg_.window <= buf2_.size() - 1 - k2_)
                               ? k2_ + cfg_.window
                               : buf2_.size() - 1;
  const SegmentPair seg{std::span<const Symbol>(buf1_).subspan(k1_, end1 - k1_ + 1),
                        std::span<const Symbol>(buf2_).subspan(k2_, end2 - k2_ + 1)};
  const OptimizeResult r = optimize_segment(seg, cfg_.cost_mode);
  if (r.matched()) {
    emit_matched_block(r);
    return Step::advanced;
  }

  if (windowed) {
    // Nothing matches inside the window: gap both current symbols and move
    // on, so a finite window always makes progress at bounded cost.
    out1_.cells.push_back(AlignedCell::symbol_cell(buf1_[k1_]));
    out2_.cells.push_back(AlignedCell::gap());
    out1_.cells.push_back(AlignedCell::gap());
    out2_.cells.push_back(AlignedCell::symbol_cell(buf2_[k2_]));
    per_call_gaps_.emplace_back(1, 1);
    ++k1_;
    ++k2_;
    search_k1_ = kNoCursor;
    return Step::advanced;
  }

  // Unlimited window and the remainders share no symbol at all.
  apply_terminal();
  return Step::advanced;
}

void IncrementalAligner::emit_matched_block(const OptimizeResult& r) {
  for (std::size_t t = 0; t < r.i; ++t) {
    out1_.cells.push_back(AlignedCell::symbol_cell(buf1_[k1_ + t]));
    out2_.cells.push_back(AlignedCell::gap());
  }
  for (std::size_t t = 0; t < r.j; ++t) {
    out1_.cells.push_back(AlignedCell::gap());
    out2_.cells.push_back(AlignedCell::symbol_cell(buf2_[k2_ + t]));
  }
  out1_.cells.push_back(AlignedCell::symbol_cell(buf1_[k1_ + r.i]));
  out2_.cells.push_back(AlignedCell::symbol_cell(buf2_[k2_ + r.j]));
  per_call_gaps_.emplace_back(r.gaps_into_s1, r.gaps_into_s2);
  k1_ += r.i + 1;
  k2_ += r.j + 1;
  search_k1_ = kNoCursor;
}

void IncrementalAligner::apply_terminal() {
  const auto rest1 = std::span<const Symbol>(buf1_).subspan(k1_);
  const auto rest2 = std::span<const Symbol>(buf2_).subspan(k2_);
  if (!rest1.empty() || !rest2.empty()) {
    TerminalBlock block = terminal_block(rest1, rest2, cfg_.tail_policy);
    out1_.cells.insert(out1_.cells.end(), block.cells1.begin(), block.cells1.end());
    out2_.cells.insert(out2_.cells.end(), block.cells2.begin(), block.cells2.end());
    tail_length_ = block.tail_length;
    tail_sequence_ = block.tail_length > 0 ? 1 : 0;
    out1_.tail_length = block.tail_length;
    const std::size_t gaps_into_1 = rest2.size();
    const std::size_t gaps_into_2 = cfg_.tail_policy == TailPolicy::pad ? rest1.size() : 0;
    if (gaps_into_1 + gaps_into_2 > 0) {
      per_call_gaps_.emplace_back(gaps_into_1, gaps_into_2);
    }
  }
  k1_ = buf1_.size();
  k2_ = buf2_.size();
  terminal_done_ = true;
}

IncrementalAligner::Snapshot IncrementalAligner::snapshot() const {
  if (finalized_) throw std::logic_error("snapshot after finalize");
  Snapshot snap;
  snap.resolved1 = k1_;
  snap.resolved2 = k2_;
  snap.unresolved1 = buf1_.size() - k1_;
  snap.unresolved2 = buf2_.size() - k2_;
  if (k1_ + k2_ == 0) return snap;  // nothing resolved: identity metrics
  AlignmentResult prefix;
  prefix.stretched1 = out1_;
  prefix.stretched2 = out2_;
  prefix.len1 = k1_;
  prefix.len2 = k2_;
  prefix.stretched_len1 = out1_.cells.size();
  prefix.stretched_len2 = out2_.cells.size();
  prefix.runs1 = extract_runs(prefix.stretched1);
  prefix.runs2 = extract_runs(prefix.stretched2);
  prefix.tail_policy = cfg_.tail_policy;
  snap.metrics = collective_metrics(prefix);
  return snap;
}

AlignmentResult IncrementalAligner::finalize() {
  if (finalized_) throw std::logic_error("finalize called twice");
  finalized_ = true;
  drain(true);

  AlignmentResult r;
  r.len1 = buf1_.size();
  r.len2 = buf2_.size();
  r.stretched1 = std::move(out1_);
  r.stretched2 = std::move(out2_);
  r.stretched_len1 = r.stretched1.cells.size();
  r.stretched_len2 = r.stretched2.cells.size();
  r.tail_length = tail_length_;
  r.tail_sequence = tail_sequence_;
  r.runs1 = extract_runs(r.stretched1);
  r.runs2 = extract_runs(r.stretched2);
  r.per_call_gaps = std::move(per_call_gaps_);
  r.tail_policy = cfg_.tail_policy;
  return r;
}

}  // namespace stretchalign
