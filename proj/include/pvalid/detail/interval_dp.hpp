#pragma once

// Interval DP over letter codes (2 * base + barred). f(i, j) counts valid
// noncrossing matchings of the half-open interval [i, j); the first position
// i pairs with some k of opposite parity offset, splitting [i+1, k) and
// [k+1, j). Only even-length intervals are ever filled.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace pvalid::detail {

inline constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

constexpr bool complementary_codes(std::uint32_t a, std::uint32_t b) noexcept { return (a ^ b) == 1; }

/// `table` is a row-major (L+1)x(L+1) scratch area; returns f(0, L).
/// `forced`, when non-empty, gives a required 0-based partner per position
/// (kFree where unconstrained).
template <typename Count, typename Code>
Count interval_count(std::span<const Code> codes, std::span<Count> table,
                     std::span<const std::size_t> forced = {}) {
  const std::size_t len = codes.size();
  if (len % 2 != 0) return Count(0);
  const std::size_t stride = len + 1;
  auto f = [&](std::size_t i, std::size_t j) -> Count& { return table[i * stride + j]; };
  for (std::size_t i = 0; i <= len; ++i) f(i, i) = Count(1);
  for (std::size_t width = 2; width <= len; width += 2) {
    for (std::size_t i = 0; i + width <= len; ++i) {
      const std::size_t j = i + width;
      Count total(0);
      if (!forced.empty() && forced[i] != kFree) {
        const std::size_t k = forced[i];
        if (k > i && k < j && (k - i) % 2 == 1 && complementary_codes(codes[i], codes[k])) {
          total = f(i + 1, k) * f(k + 1, j);
        }
      } else {
        for (std::size_t k = i + 1; k < j; k += 2) {
          if (!complementary_codes(codes[i], codes[k])) continue;
          if (!forced.empty() && forced[k] != kFree) continue;
          const Count& inside = f(i + 1, k);
          if (inside == 0) continue;
          total += inside * f(k + 1, j);
        }
      }
      f(i, j) = std::move(total);
    }
  }
  return f(0, len);
}

}  // namespace pvalid::detail
