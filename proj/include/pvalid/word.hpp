#pragma once

// Letters of a complementary alphabet and words over them.
//
// An alphabet of size m has bases 0..m-1, each appearing plain (A, B, ...)
// or barred (the complement, written a, b, ... in compact text).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pvalid {

struct Letter {
  std::uint32_t base = 0;
  bool barred = false;

  /// Position in the word-space order A < a < B < b < ...
  constexpr std::uint32_t code() const noexcept { return 2 * base + (barred ? 1 : 0); }

  static constexpr Letter from_code(std::uint32_t c) noexcept { return Letter{c / 2, (c & 1) != 0}; }

  friend constexpr auto operator<=>(const Letter& a, const Letter& b) noexcept {
    return a.code() <=> b.code();
  }
  friend constexpr bool operator==(const Letter&, const Letter&) noexcept = default;
};

constexpr Letter complement(Letter x) noexcept { return Letter{x.base, !x.barred}; }

constexpr bool are_complementary(Letter x, Letter y) noexcept {
  return x.base == y.base && x.barred != y.barred;
}

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 0-based access; user-facing positions are 1-based.
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }

  /// Smallest alphabet size that contains every letter (0 for the empty word).
  std::uint32_t min_alphabet_size() const noexcept;

  /// Cyclic left rotation by r positions.
  Word rotated(std::size_t r) const;

  /// Inserts `letters` before 0-based index `at`.
  Word with_inserted(std::size_t at, std::initializer_list<Letter> letters) const;

  Word concat(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Parses the compact format: 'A'..'Z' plain, 'a'..'z' barred, restricted to
/// the first m bases. The empty string is the empty word.
Word parse_word(std::string_view text, std::uint32_t m);

/// Parses the numeric fallback "+1,-1,+2": +k plain base k, -k barred, 1-based.
Word parse_numeric_word(std::string_view text, std::uint32_t m);

/// Numeric form if the text starts with a sign or digit, compact otherwise.
Word parse_any_word(std::string_view text, std::uint32_t m);

/// Compact format. Throws FormatError when a base exceeds 25.
std::string format_word(const Word& w);

std::string format_numeric_word(const Word& w);

/// Compact when possible, numeric otherwise.
std::string format_any_word(const Word& w);

struct BalanceStats {
  struct Counts {
    std::size_t plain = 0;
    std::size_t barred = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
  };

  /// Indexed by base; sized to the largest base present + 1.
  std::vector<Counts> per_base;
  std::size_t length = 0;

  Counts of(std::uint32_t base) const noexcept {
    return base < per_base.size() ? per_base[base] : Counts{};
  }

  bool base_balanced(std::uint32_t base) const noexcept {
    auto c = of(base);
    return c.plain == c.barred;
  }

  bool is_balanced() const noexcept;
};

BalanceStats balance_stats(const Word& w);

inline bool is_balanced(const Word& w) { return balance_stats(w).is_balanced(); }

}  // namespace pvalid
