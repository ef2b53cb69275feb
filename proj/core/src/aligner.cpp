#include "stretchalign/aligner.hpp"

#include <stdexcept>

#include "stretchalign/incremental.hpp"

namespace stretchalign {

std::optional<std::size_t> find_forward_match(const Sequence& s, std::size_t from,
                                              Symbol target, std::size_t window) {
  if (from >= s.size()) {
    throw std::invalid_argument("find_forward_match: from out of range");
  }
  const std::size_t remaining = s.size() - 1 - from;
  const std::size_t last =
      (window != kUnlimitedWindow && window <= remaining) ? from + window : s.size() - 1;
  for (std::size_t p = from + 1; p <= last; ++p) {
    if (s[p] == target) return p;
  }
  return std::nullopt;
}

TerminalBlock terminal_block(std::span<const Symbol> rest1, std::span<const Symbol> rest2,
                             TailPolicy policy) {
  TerminalBlock block;
  block.cells1.reserve(rest1.size() + rest2.size());
  block.cells2.reserve(rest1.size() + rest2.size());
  if (policy == TailPolicy::pad) {
    for (const Symbol s : rest1) {
      block.cells1.push_back(AlignedCell::symbol_cell(s));
      block.cells2.push_back(AlignedCell::gap());
    }
    for (const Symbol s : rest2) {
      block.cells1.push_back(AlignedCell::gap());
      block.cells2.push_back(AlignedCell::symbol_cell(s));
    }
  } else {
    for (const Symbol s : rest2) {
      block.cells1.push_back(AlignedCell::gap());
      block.cells2.push_back(AlignedCell::symbol_cell(s));
    }
    // Sequence 1's leftover rides along unpaired; nothing is added opposite.
    for (const Symbol s : rest1) {
      block.cells1.push_back(AlignedCell::symbol_cell(s));
    }
    block.tail_length = rest1.size();
  }
  return block;
}

AlignmentResult align(const Sequence& s1, const Sequence& s2, const AlignerConfig& cfg) {
  IncrementalAligner engine(cfg);
  engine.push1(s1);
  engine.push2(s2);
  return engine.finalize();
}

}  // namespace stretchalign
