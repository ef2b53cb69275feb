#include "stretchalign/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <tuple>

namespace stretchalign {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void check_symbol(std::uint64_t value, std::size_t alphabet_size, std::size_t position) {
  if (value >= alphabet_size) {
    throw ParseError("symbol " + std::to_string(value) + " at position " +
                         std::to_string(position) + " is outside the alphabet",
                     position);
  }
}

Sequence parse_dec(std::string_view bytes, std::size_t alphabet_size) {
  Sequence out;
  std::size_t k = 0;
  while (k < bytes.size()) {
    if (is_space(bytes[k])) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < bytes.size() && !is_space(bytes[k])) ++k;
    const std::string_view token = bytes.substr(start, k - start);
    std::uint64_t value = 0;
    for (const char c : token) {
      if (c < '0' || c > '9' || value > kMaxAlphabetSize) {
        throw ParseError("malformed decimal token '" + std::string(token) +
                             "' at position " + std::to_string(out.size()),
                         out.size());
      }
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    check_symbol(value, alphabet_size, out.size());
    out.push_back(static_cast<Symbol>(value));
  }
  return out;
}

Sequence parse_hex(std::string_view bytes, std::size_t alphabet_size) {
  Sequence out;
  for (const char c : bytes) {
    if (is_space(c)) continue;
    const int value = hex_value(c);
    if (value < 0) {
      throw ParseError("invalid hex digit '" + std::string(1, c) + "' at position " +
                           std::to_string(out.size()),
                       out.size());
    }
    check_symbol(static_cast<std::uint64_t>(value), alphabet_size, out.size());
    out.push_back(static_cast<Symbol>(value));
  }
  return out;
}

Sequence parse_raw4(std::string_view bytes, std::size_t alphabet_size) {
  Sequence out;
  out.reserve(bytes.size() * 2);
  for (const char byte : bytes) {
    const auto u = static_cast<std::uint8_t>(byte);
    const std::uint8_t nibbles[2] = {static_cast<std::uint8_t>(u >> 4),
                                     static_cast<std::uint8_t>(u & 0xF)};
    for (const std::uint8_t v : nibbles) {
      check_symbol(v, alphabet_size, out.size());
      out.push_back(v);
    }
  }
  return out;
}

Sequence parse_raw8(std::string_view bytes, std::size_t alphabet_size) {
  Sequence out;
  out.reserve(bytes.size());
  for (const char byte : bytes) {
    const auto u = static_cast<std::uint8_t>(byte);
    check_symbol(u, alphabet_size, out.size());
    out.push_back(u);
  }
  return out;
}

std::string cell_token(AlignedCell cell) {
  return cell.is_gap() ? "_" : std::to_string(cell.symbol());
}

std::string csv_field(const std::string& id) {
  if (id.find_first_of(",\"\n\r") == std::string::npos) return id;
  std::string out = "\"";
  for (const char c : id) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

const char* to_string(SequenceFormat f) {
  switch (f) {
    case SequenceFormat::dec_text:
      return "dec";
    case SequenceFormat::hex_text:
      return "hex";
    case SequenceFormat::raw4:
      return "raw4";
    case SequenceFormat::raw8:
      return "raw8";
  }
  return "?";
}

SequenceFormat sequence_format_from_string(std::string_view name) {
  if (name == "dec") return SequenceFormat::dec_text;
  if (name == "hex") return SequenceFormat::hex_text;
  if (name == "raw4") return SequenceFormat::raw4;
  if (name == "raw8") return SequenceFormat::raw8;
  throw std::invalid_argument("unknown sequence format '" + std::string(name) +
                              "' (expected dec, hex, raw4 or raw8)");
}

Sequence parse_sequence(std::string_view bytes, SequenceFormat format,
                        std::size_t alphabet_size) {
  switch (format) {
    case SequenceFormat::dec_text:
      return parse_dec(bytes, alphabet_size);
    case SequenceFormat::hex_text:
      return parse_hex(bytes, alphabet_size);
    case SequenceFormat::raw4:
      return parse_raw4(bytes, alphabet_size);
    case SequenceFormat::raw8:
      return parse_raw8(bytes, alphabet_size);
  }
  throw std::invalid_argument("parse_sequence: unknown format");
}

std::string write_sequence(const Sequence& sequence, SequenceFormat format) {
  std::string out;
  switch (format) {
    case SequenceFormat::dec_text: {
      for (std::size_t k = 0; k < sequence.size(); ++k) {
        if (k != 0) out += ' ';
        out += std::to_string(sequence[k]);
      }
      out += '\n';
      return out;
    }
    case SequenceFormat::hex_text: {
      for (const Symbol s : sequence) {
        if (s > 15) {
          throw std::invalid_argument("hex format cannot encode symbol " + std::to_string(s));
        }
        out += "0123456789ABCDEF"[s];
      }
      out += '\n';
      return out;
    }
    case SequenceFormat::raw4: {
      if (sequence.size() % 2 != 0) {
        throw std::invalid_argument("raw4 requires an even number of symbols");
      }
      out.reserve(sequence.size() / 2);
      for (std::size_t k = 0; k < sequence.size(); k += 2) {
        if (sequence[k] > 15 || sequence[k + 1] > 15) {
          throw std::invalid_argument("raw4 cannot encode symbols above 15");
        }
        out += static_cast<char>((sequence[k] << 4) | sequence[k + 1]);
      }
      return out;
    }
    case SequenceFormat::raw8: {
      out.reserve(sequence.size());
      for (const Symbol s : sequence) {
        if (s > 255) {
          throw std::invalid_argument("raw8 cannot encode symbol " + std::to_string(s));
        }
        out += static_cast<char>(s);
      }
      return out;
    }
  }
  throw std::invalid_argument("write_sequence: unknown format");
}

std::string write_alignment(const AlignmentResult& r) {
  const auto& c1 = r.stretched1.cells;
  const auto& c2 = r.stretched2.cells;
  const std::size_t shared = std::min(c1.size(), c2.size());

  std::string line1;
  std::string line2;
  std::string line3;
  for (std::size_t k = 0; k < c1.size(); ++k) {
    if (k != 0) line1 += ' ';
    line1 += cell_token(c1[k]);
  }
  for (std::size_t k = 0; k < c2.size(); ++k) {
    if (k != 0) line2 += ' ';
    line2 += cell_token(c2[k]);
  }
  for (std::size_t k = 0; k < shared; ++k) {
    if (k != 0) line3 += ' ';
    const std::size_t width = std::max(cell_token(c1[k]).size(), cell_token(c2[k]).size());
    const bool matched = c1[k].is_symbol() && c2[k].is_symbol();
    line3 += matched ? "|" : " ";
    line3.append(width - 1, ' ');
  }
  while (!line3.empty() && line3.back() == ' ') line3.pop_back();
  return line1 + '\n' + line2 + '\n' + line3 + '\n';
}

ResultRow make_result_row(std::string id1, std::string id2, const AlignmentResult& r,
                          const CollectiveMetrics& m) {
  ResultRow row;
  row.id1 = std::move(id1);
  row.id2 = std::move(id2);
  row.len1 = r.len1;
  row.len2 = r.len2;
  row.tail_len = r.tail_length;
  row.a = m.a;
  row.log2_b = m.log2_b;
  row.cost_is_zero = m.cost_is_zero;
  row.quadrant = m.quadrant;
  row.runs1 = r.runs1.size();
  row.runs2 = r.runs2.size();
  std::size_t longest = 0;
  for (const GapRun& run : r.runs1) longest = std::max(longest, run.length);
  for (const GapRun& run : r.runs2) longest = std::max(longest, run.length);
  row.longest_run = longest;
  return row;
}

std::string write_csv(std::vector<ResultRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.id1, a.id2) < std::tie(b.id1, b.id2);
  });
  std::string out =
      "id1,id2,len1,len2,tail_len,a,log2_b,cost_is_zero,quadrant,runs1,runs2,longest_run\n";
  for (const ResultRow& row : rows) {
    out += csv_field(row.id1);
    out += ',';
    out += csv_field(row.id2);
    out += ',';
    out += std::to_string(row.len1);
    out += ',';
    out += std::to_string(row.len2);
    out += ',';
    out += std::to_string(row.tail_len);
    out += ',';
    out += format_fixed(row.a, 4);
    out += ',';
    out += format_fixed(row.log2_b, 2);
    out += ',';
    out += row.cost_is_zero ? "true" : "false";
    out += ',';
    out += to_string(row.quadrant);
    out += ',';
    out += std::to_string(row.runs1);
    out += ',';
    out += std::to_string(row.runs2);
    out += ',';
    out += std::to_string(row.longest_run);
    out += '\n';
  }
  return out;
}

std::string format_fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  std::string s = buf;
  // "-0.00" and friends carry no information; normalise the sign away.
  if (s.size() > 1 && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

}  // namespace stretchalign
