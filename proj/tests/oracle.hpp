#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the DP, the tree bijection, or the survey kernels.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "pvalid/word.hpp"

namespace pvalid::oracle {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;  // 1-based

inline void all_perfect(std::vector<std::size_t>& free, Pairs& cur, std::vector<Pairs>& out) {
  if (free.empty()) {
    out.push_back(cur);
    return;
  }
  const std::size_t a = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const std::size_t b = free[i];
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < free.size(); ++j) {
      if (j != i) rest.push_back(free[j]);
    }
    cur.emplace_back(a, b);
    all_perfect(rest, cur, out);
    cur.pop_back();
  }
}

inline bool crosses(const Pairs& m) {
  for (const auto& [a, b] : m) {
    for (const auto& [c, d] : m) {
      if (a < c && c < b && b < d) return true;
    }
  }
  return false;
}

/// Every perfect matching on 1..2n filtered by the pairwise crossing test.
inline const std::vector<Pairs>& noncrossing(std::size_t n) {
  static std::map<std::size_t, std::vector<Pairs>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::size_t> pts(2 * n);
  std::iota(pts.begin(), pts.end(), std::size_t{1});
  std::vector<Pairs> all;
  Pairs cur;
  all_perfect(pts, cur, all);
  std::vector<Pairs> keep;
  for (auto& m : all) {
    if (!crosses(m)) {
      std::sort(m.begin(), m.end());
      keep.push_back(std::move(m));
    }
  }
  std::sort(keep.begin(), keep.end());
  return cache.emplace(n, std::move(keep)).first->second;
}

inline bool complementary(const Letter& x, const Letter& y) {
  return x.base == y.base && x.barred != y.barred;
}

inline std::vector<Pairs> valid(const Word& w) {
  std::vector<Pairs> out;
  if (w.size() % 2 != 0) return out;
  for (const auto& m : noncrossing(w.size() / 2)) {
    bool ok = true;
    for (const auto& [a, b] : m) ok = ok && complementary(w[a - 1], w[b - 1]);
    if (ok) out.push_back(m);
  }
  return out;
}

inline std::uint64_t count(const Word& w) { return valid(w).size(); }

/// Drives a unit-fuel car mile by mile from `start` (0-based); true if the
/// tank never goes negative over a full lap.
inline bool circuit_completes(const std::vector<std::size_t>& gaps, std::size_t start) {
  long fuel = 0;
  for (std::size_t step = 0; step < gaps.size(); ++step) {
    const std::size_t s = (start + step) % gaps.size();
    fuel += 1;
    for (std::size_t mile = 0; mile < gaps[s]; ++mile) {
      fuel -= 1;
      if (fuel < 0) return false;
    }
  }
  return true;
}

/// Applies every base permutation and polarity swap; returns all images.
inline std::vector<Word> orbit(const Word& w, std::uint32_t m) {
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Word> out;
  do {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Letter> letters;
      for (const auto& x : w) letters.push_back(Letter{perm[x.base], x.barred != (((mask >> x.base) & 1u) != 0)});
      out.emplace_back(std::move(letters));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All words of the given length over m pairs, lexicographic.
inline std::vector<Word> all_words(std::size_t length, std::uint32_t m) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (std::uint32_t c = 0; c < 2 * m; ++c) {
        std::vector<Letter> letters(w.begin(), w.end());
        letters.push_back(Letter::from_code(c));
        next.emplace_back(std::move(letters));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t length, std::uint32_t m) {
  std::uniform_int_distribution<std::uint32_t> code(0, 2 * m - 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(Letter::from_code(code(rng)));
  return Word(std::move(letters));
}

/// Random balanced word: n letters drawn from the m bases, each paired with
/// its complement, then shuffled.
inline Word random_balanced_word(std::mt19937_64& rng, std::size_t n, std::uint32_t m) {
  std::uniform_int_distribution<std::uint32_t> base(0, m - 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t b = base(rng);
    letters.push_back(Letter{b, false});
    letters.push_back(Letter{b, true});
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return Word(std::move(letters));
}

}  // namespace pvalid::oracle
