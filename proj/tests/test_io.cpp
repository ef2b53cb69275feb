#include <stdexcept>

#include "doctest.h"
#include "stretchalign/io.hpp"
#include "testutil.hpp"

using namespace stretchalign;

TEST_CASE("parse_sequence basics") {
  CHECK(parse_sequence("6 9 1", SequenceFormat::dec_text) == Sequence{6, 9, 1});
  CHECK(parse_sequence("  6\n9\t1 ", SequenceFormat::dec_text) == Sequence{6, 9, 1});
  CHECK(parse_sequence("3199", SequenceFormat::hex_text) == Sequence{3, 1, 9, 9});
  CHECK(parse_sequence("3 1\n9 9", SequenceFormat::hex_text) == Sequence{3, 1, 9, 9});
  CHECK(parse_sequence("\x69\x14", SequenceFormat::raw4) == Sequence{6, 9, 1, 4});
  CHECK(parse_sequence("\xAB", SequenceFormat::raw4) == Sequence{10, 11});
  CHECK(parse_sequence("\x06\x0F", SequenceFormat::raw8) == Sequence{6, 15});
  CHECK(parse_sequence("", SequenceFormat::dec_text).empty());
}

TEST_CASE("parse_sequence reports the failing symbol position") {
  SUBCASE("malformed decimal token") {
    try {
      parse_sequence("6 x 1", SequenceFormat::dec_text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 1);
    }
  }
  SUBCASE("out-of-alphabet values") {
    try {
      parse_sequence("6 9 17", SequenceFormat::dec_text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_sequence("9", SequenceFormat::dec_text, 8), ParseError);
    CHECK_THROWS_AS(parse_sequence("\x09", SequenceFormat::raw8, 8), ParseError);
    CHECK_THROWS_AS(parse_sequence("\x9A", SequenceFormat::raw4, 10), ParseError);
  }
  SUBCASE("invalid hex digit") {
    CHECK_THROWS_AS(parse_sequence("12g4", SequenceFormat::hex_text), ParseError);
  }
}

TEST_CASE("format names round-trip") {
  for (const auto f : {SequenceFormat::dec_text, SequenceFormat::hex_text,
                       SequenceFormat::raw4, SequenceFormat::raw8}) {
    CHECK(sequence_format_from_string(to_string(f)) == f);
  }
  CHECK_THROWS_AS(sequence_format_from_string("binary"), std::invalid_argument);
}

TEST_CASE("parse is the inverse of write on random sequences") {
  SplitMix64 rng{4040};
  int cases = 0;
  while (cases < 10000) {
    for (const auto f : {SequenceFormat::dec_text, SequenceFormat::hex_text,
                         SequenceFormat::raw4, SequenceFormat::raw8}) {
      std::size_t len = rng.next() % 64;
      if (f == SequenceFormat::raw4 && len % 2 != 0) ++len;  // raw4 is byte-packed
      const Sequence s = testutil::random_sequence(rng, len);
      CHECK(parse_sequence(write_sequence(s, f), f) == s);
      ++cases;
    }
  }
}

TEST_CASE("write_sequence rejects what cannot round-trip") {
  CHECK_THROWS_AS(write_sequence(Sequence{1, 2, 3}, SequenceFormat::raw4),
                  std::invalid_argument);
  CHECK_THROWS_AS(write_sequence(Sequence{16}, SequenceFormat::hex_text),
                  std::invalid_argument);
  CHECK_THROWS_AS(write_sequence(Sequence{300}, SequenceFormat::raw8),
                  std::invalid_argument);
}

TEST_CASE("write_alignment renders matched columns") {
  SUBCASE("identical pair") {
    const AlignmentResult r = align(Sequence{1, 2}, Sequence{1, 2});
    CHECK(write_alignment(r) == "1 2\n1 2\n| |\n");
  }
  SUBCASE("empty pair") {
    const AlignmentResult r = align(Sequence{}, Sequence{});
    CHECK(write_alignment(r) == "\n\n\n");
  }
  SUBCASE("gaps render as underscores") {
    const AlignmentResult r = align(Sequence{1, 2, 3}, Sequence{4, 5, 6});
    CHECK(write_alignment(r) == "1 2 3 _ _ _\n_ _ _ 4 5 6\n\n");
  }
}

TEST_CASE("result rows format deterministically") {
  const Sequence s{1, 2, 3, 4};
  const AlignmentResult r = align(s, s);
  const CollectiveMetrics m = collective_metrics(r);
  const ResultRow row = make_result_row("self", "self", r, m);
  const std::string csv = write_csv({row});
  CHECK(csv ==
        "id1,id2,len1,len2,tail_len,a,log2_b,cost_is_zero,quadrant,runs1,runs2,longest_run\n"
        "self,self,4,4,0,1.0000,0.00,true,I,0,0,0\n");
}

TEST_CASE("write_csv sorts and quotes") {
  ResultRow second;
  second.id1 = "b";
  second.id2 = "x";
  ResultRow first;
  first.id1 = "a,weird";
  first.id2 = "y\"q";
  const std::string csv = write_csv({second, first});
  const std::string expected_header =
      "id1,id2,len1,len2,tail_len,a,log2_b,cost_is_zero,quadrant,runs1,runs2,longest_run\n";
  CHECK(csv.substr(0, expected_header.size()) == expected_header);
  const std::size_t first_row = csv.find('\n') + 1;
  CHECK(csv.substr(first_row, 18) == "\"a,weird\",\"y\"\"q\",0");
  CHECK(write_csv({}) == expected_header);
}

TEST_CASE("format_fixed normalises negative zero") {
  CHECK(format_fixed(-0.0001, 2) == "0.00");
  CHECK(format_fixed(-0.40, 2) == "-0.40");
  CHECK(format_fixed(2.0, 4) == "2.0000");
}
