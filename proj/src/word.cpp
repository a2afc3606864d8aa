#include "pvalid/word.hpp"

#include <algorithm>
#include <charconv>

#include "pvalid/errors.hpp"

namespace pvalid {

std::uint32_t Word::min_alphabet_size() const noexcept {
  std::uint32_t m = 0;
  for (const auto& x : letters_) m = std::max(m, x.base + 1);
  return m;
}

Word Word::rotated(std::size_t r) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
  return Word(std::move(out));
}

Word Word::with_inserted(std::size_t at, std::initializer_list<Letter> letters) const {
  std::vector<Letter> out(letters_);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), letters);
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text, std::uint32_t m) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    Letter x;
    if (c >= 'A' && c <= 'Z') {
      x = Letter{static_cast<std::uint32_t>(c - 'A'), false};
    } else if (c >= 'a' && c <= 'z') {
      x = Letter{static_cast<std::uint32_t>(c - 'a'), true};
    } else {
      throw ParseError(i + 1, std::string("unexpected character '") + c + "'");
    }
    if (x.base >= m) {
      throw ParseError(i + 1, std::string("letter '") + c + "' outside alphabet of size " +
                                  std::to_string(m));
    }
    letters.push_back(x);
  }
  return Word(std::move(letters));
}

Word parse_numeric_word(std::string_view text, std::uint32_t m) {
  std::vector<Letter> letters;
  if (text.empty()) return Word{};
  std::size_t token = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++token;
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view item = text.substr(start, stop - start);
    if (item.empty()) throw ParseError(token, "empty item");
    bool barred = false;
    if (item.front() == '+' || item.front() == '-') {
      barred = item.front() == '-';
      item.remove_prefix(1);
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw ParseError(token, "expected a nonzero signed integer");
    }
    if (value > m) {
      throw ParseError(token, "base " + std::to_string(value) + " outside alphabet of size " +
                                  std::to_string(m));
    }
    letters.push_back(Letter{value - 1, barred});
    start = stop + 1;
  }
  return Word(std::move(letters));
}

Word parse_any_word(std::string_view text, std::uint32_t m) {
  if (!text.empty() && (text.front() == '+' || text.front() == '-' ||
                        (text.front() >= '0' && text.front() <= '9'))) {
    return parse_numeric_word(text, m);
  }
  return parse_word(text, m);
}

std::string format_word(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter x = w[i];
    if (x.base > 25) {
      throw FormatError("base " + std::to_string(x.base + 1) + " at position " +
                        std::to_string(i + 1) + " has no compact letter; use the numeric format");
    }
    out.push_back(static_cast<char>((x.barred ? 'a' : 'A') + x.base));
  }
  return out;
}

std::string format_numeric_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(w[i].barred ? '-' : '+');
    out += std::to_string(w[i].base + 1);
  }
  return out;
}

std::string format_any_word(const Word& w) {
  return w.min_alphabet_size() <= 26 ? format_word(w) : format_numeric_word(w);
}

bool BalanceStats::is_balanced() const noexcept {
  if (length % 2 != 0) return false;
  return std::all_of(per_base.begin(), per_base.end(),
                     [](const Counts& c) { return c.plain == c.barred; });
}

BalanceStats balance_stats(const Word& w) {
  BalanceStats stats;
  stats.length = w.size();
  stats.per_base.resize(w.min_alphabet_size());
  for (const auto& x : w) {
    auto& c = stats.per_base[x.base];
    (x.barred ? c.barred : c.plain) += 1;
  }
  return stats;
}

}  // namespace pvalid
