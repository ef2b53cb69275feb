#include "stretchalign/types.hpp"

#include <stdexcept>
#include <string>

namespace stretchalign {

std::vector<GapRun> extract_runs(const StretchedSequence& s) {
  std::vector<GapRun> runs;
  std::size_t pos = 0;
  const std::size_t n = s.cells.size();
  while (pos < n) {
    if (!s.cells[pos].is_gap()) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < n && s.cells[pos].is_gap()) ++pos;
    runs.push_back(GapRun{start, pos - start});
  }
  return runs;
}

Sequence degap(const StretchedSequence& s) {
  Sequence out;
  out.reserve(s.cells.size());
  for (const AlignedCell cell : s.cells) {
    if (cell.is_symbol()) out.push_back(cell.symbol());
  }
  return out;
}

void validate_alphabet(std::span<const Symbol> symbols, std::size_t alphabet_size,
                       std::size_t offset) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabetSize) {
    throw std::invalid_argument("alphabet size must be in [1, " +
                                std::to_string(kMaxAlphabetSize) + "]");
  }
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k] >= alphabet_size) {
      throw std::invalid_argument("symbol " + std::to_string(symbols[k]) +
                                  " at position " + std::to_string(offset + k) +
                                  " exceeds alphabet of size " +
                                  std::to_string(alphabet_size));
    }
  }
}

}  // namespace stretchalign
