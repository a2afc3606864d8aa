#pragma once

// The two-block family A^k a^k A^l a^l over a single base.

#include <cstddef>
#include <string>
#include <vector>

#include "pvalid/counting.hpp"
#include "pvalid/word.hpp"

namespace pvalid {

/// k, l >= 1. Throws std::invalid_argument otherwise.
class FamilyParams {
 public:
  FamilyParams(std::size_t k, std::size_t l);

  std::size_t k() const noexcept { return k_; }
  std::size_t l() const noexcept { return l_; }

 private:
  std::size_t k_;
  std::size_t l_;
};

Word family_word(const FamilyParams& params);

/// Also admits k = 0 or l = 0; A^k a^k with an empty second block has
/// exactly one valid matching. Used as the recursion base.
Word family_word_extended(std::size_t k, std::size_t l);

/// min(k, l) + 1.
ValidCount family_count_closed_form(const FamilyParams& params);

enum class RecursionCase { KGreater, LGreater, Equal };

struct RecursionEntry {
  std::size_t k = 0;
  std::size_t l = 0;
  RecursionCase which = RecursionCase::Equal;
  ValidCount lhs;       // |V(P_{k,l})|
  ValidCount rhs;       // value the recursion predicts
  bool uses_l_zero = false;  // rhs reached P_{k,0}, outside the l >= 1 range
  bool passed = false;
};

struct RecursionReport {
  std::size_t k_max = 0;
  std::vector<RecursionEntry> entries;  // sorted by (k, l)

  std::size_t failures() const;
};

/// Checks every (k, l) in [1, k_max]^2 with the DP:
///   k > l:  V(k,l) = V(k-1,l)
///   l > k:  V(k,l) = V(k,l-1)
///   k = l:  V(k,l) = 1 + V(k,l-1)
RecursionReport verify_family_recursion(std::size_t k_max);

std::string to_string(RecursionCase c);

}  // namespace pvalid
