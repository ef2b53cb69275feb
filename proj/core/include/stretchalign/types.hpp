#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stretchalign {

using Symbol = std::uint16_t;

// A plain run of alphabet symbols. Values must stay below the configured
// alphabet size; the boundaries (parsers, generators, the aligner) validate.
using Sequence = std::vector<Symbol>;

inline constexpr std::size_t kDefaultAlphabetSize = 16;
// The top code is reserved for the gap cell, so alphabets stop one short.
inline constexpr std::size_t kMaxAlphabetSize = 0xFFFF;

// One cell of a stretched sequence: either a symbol or a gap.
struct AlignedCell {
  static constexpr std::uint16_t kGapCode = 0xFFFF;

  std::uint16_t code = kGapCode;

  static constexpr AlignedCell gap() { return AlignedCell{kGapCode}; }
  static constexpr AlignedCell symbol_cell(Symbol s) { return AlignedCell{s}; }

  constexpr bool is_gap() const { return code == kGapCode; }
  constexpr bool is_symbol() const { return code != kGapCode; }
  // Meaningful only when is_symbol().
  constexpr Symbol symbol() const { return code; }

  friend constexpr bool operator==(AlignedCell, AlignedCell) = default;
};

// Aligned output: the original symbols in order, interleaved with gap cells.
// tail_length counts trailing symbol cells that have no partner cells in the
// other stretched sequence (tail policy only; 0 otherwise).
struct StretchedSequence {
  std::vector<AlignedCell> cells;
  std::size_t tail_length = 0;

  std::size_t stretched_length() const { return cells.size(); }

  friend bool operator==(const StretchedSequence&, const StretchedSequence&) = default;
};

// Maximal block of consecutive gaps: cells[start, start+length) are gaps and
// the neighbouring cells, when they exist, are not.
struct GapRun {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const GapRun&, const GapRun&) = default;
};

// All maximal gap runs in positional order.
std::vector<GapRun> extract_runs(const StretchedSequence& s);

// Strips the gaps; tail symbols are kept.
Sequence degap(const StretchedSequence& s);

// Throws std::invalid_argument naming the first offending position (offset is
// added to the reported position, for streamed input).
void validate_alphabet(std::span<const Symbol> symbols, std::size_t alphabet_size,
                       std::size_t offset = 0);

}  // namespace stretchalign
