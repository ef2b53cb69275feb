#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stretchalign/aligner.hpp"
#include "stretchalign/metrics.hpp"
#include "stretchalign/types.hpp"

namespace stretchalign {

// dec_text: whitespace-separated decimal symbols. hex_text: one hex digit
// per symbol, whitespace ignored. raw4: packed nibbles, high first. raw8:
// one byte per symbol.
enum class SequenceFormat { dec_text, hex_text, raw4, raw8 };

const char* to_string(SequenceFormat f);
// Accepts "dec", "hex", "raw4", "raw8"; throws std::invalid_argument.
SequenceFormat sequence_format_from_string(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  // Symbol index (not byte offset) where parsing failed.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Decodes bytes into symbols; exact inverse of write_sequence. raw4 maps
/// byte 0xAB to the symbols [10, 11]. Throws ParseError on malformed text or
/// out-of-alphabet symbols, reporting the symbol position.
Sequence parse_sequence(std::string_view bytes, SequenceFormat format,
                        std::size_t alphabet_size = kDefaultAlphabetSize);

/// Encodes symbols; round-trips through parse_sequence for every format.
/// raw4 requires an even symbol count (a trailing half byte would not
/// round-trip) and throws std::invalid_argument otherwise, as do symbols too
/// wide for the chosen format.
std::string write_sequence(const Sequence& sequence, SequenceFormat format);

/// Three lines: both stretched sequences as space-separated decimal tokens
/// with "_" for gaps, then a marker line with "|" under matched columns.
/// Byte-stable for a fixed alignment.
std::string write_alignment(const AlignmentResult& r);

struct ResultRow {
  std::string id1;
  std::string id2;
  std::size_t len1 = 0, len2 = 0, tail_len = 0;
  double a = 1.0;
  double log2_b = 0.0;
  bool cost_is_zero = true;
  Quadrant quadrant = Quadrant::I;
  std::size_t runs1 = 0, runs2 = 0, longest_run = 0;
};

ResultRow make_result_row(std::string id1, std::string id2, const AlignmentResult& r,
                          const CollectiveMetrics& m);

/// Header plus one line per row, sorted lexicographically by (id1, id2);
/// a rendered to 4 places, log2(b) to 2, ids quoted RFC-style when needed.
/// Byte-stable across runs and platforms.
std::string write_csv(std::vector<ResultRow> rows);

// "%.<places>f" with negative zero normalised away.
std::string format_fixed(double value, int places);

}  // namespace stretchalign
