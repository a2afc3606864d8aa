#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pvalid/counting.hpp"
#include "pvalid/errors.hpp"
#include "pvalid/word.hpp"

using namespace pvalid;

namespace {
constexpr Letter A{0, false};
constexpr Letter a{0, true};
constexpr Letter B{1, false};
constexpr Letter b{1, true};
}  // namespace

TEST_CASE("parse compact words") {
  CHECK(parse_word("Aa", 1) == Word{A, a});
  CHECK(parse_word("BbaAAaaABbAaAa", 2) == Word{B, b, a, A, A, a, a, A, B, b, A, a, A, a});
  CHECK(parse_word("", 1).empty());
}

TEST_CASE("parse errors name the offending position") {
  try {
    parse_word("Ac", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("A?", 2), ParseError);
  CHECK_THROWS_AS(parse_word("AB", 1), ParseError);
}

TEST_CASE("format words") {
  CHECK(format_word(Word{A, a}) == "Aa");
  CHECK(format_word(Word{}) == "");
  CHECK(format_word(parse_word("BbaAAaaABbAaAa", 2)) == "BbaAAaaABbAaAa");
  CHECK_THROWS_AS(format_word(Word{Letter{26, false}}), FormatError);
}

TEST_CASE("numeric fallback format") {
  CHECK(parse_numeric_word("+1,-1,+2,-2", 2) == Word{A, a, B, b});
  CHECK(format_numeric_word(Word{A, a, B, b}) == "+1,-1,+2,-2");
  const Word wide{Letter{29, false}, Letter{29, true}};
  CHECK(format_any_word(wide) == "+30,-30");
  CHECK(parse_any_word("+30,-30", 30) == wide);
  CHECK(parse_any_word("Aa", 1) == Word{A, a});
  try {
    parse_numeric_word("+1,,-1", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_numeric_word("+3", 2), ParseError);
  CHECK_THROWS_AS(parse_numeric_word("+0", 2), ParseError);
}

TEST_CASE("complement") {
  CHECK(complement(A) == a);
  CHECK(complement(a) == A);
  CHECK(complement(b) == B);
  for (std::uint32_t c = 0; c < 52; ++c) {
    const Letter x = Letter::from_code(c);
    CHECK(complement(complement(x)) == x);
    CHECK(x.code() == c);
  }
}

TEST_CASE("balance statistics") {
  auto s = balance_stats(parse_word("Aa", 1));
  CHECK(s.of(0) == BalanceStats::Counts{1, 1});
  CHECK(s.is_balanced());

  s = balance_stats(parse_word("AAa", 1));
  CHECK(s.of(0) == BalanceStats::Counts{2, 1});
  CHECK_FALSE(s.is_balanced());

  s = balance_stats(parse_word("BbaAAaaABbAaAa", 2));
  CHECK(s.of(0) == BalanceStats::Counts{5, 5});
  CHECK(s.of(1) == BalanceStats::Counts{2, 2});
  CHECK(s.is_balanced());
  CHECK(s.of(7) == BalanceStats::Counts{0, 0});

  CHECK(is_balanced(Word{}));
}

TEST_CASE("round trip over random compact strings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uniform_int_distribution<std::uint32_t> msize(1, 26);
    const std::uint32_t m = msize(rng);
    std::uniform_int_distribution<std::size_t> len(0, 20);
    std::uniform_int_distribution<std::uint32_t> code(0, 2 * m - 1);
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const Letter x = Letter::from_code(code(rng));
      s.push_back(static_cast<char>((x.barred ? 'a' : 'A') + x.base));
    }
    CHECK(format_word(parse_word(s, m)) == s);
    const Word w = parse_word(s, m);
    CHECK(parse_numeric_word(format_numeric_word(w), m) == w);
  }
}

TEST_CASE("a nonzero count implies balance") {
  for (std::size_t len = 0; len <= 8; len += 2) {
    for (const auto& w : oracle::all_words(len, 2)) {
      if (count_valid(w) > 0) CHECK(is_balanced(w));
    }
  }
}
