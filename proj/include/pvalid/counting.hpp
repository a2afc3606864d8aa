#pragma once

// Exact |V(P)|: the number of noncrossing perfect matchings of a word whose
// pairs all join complementary letters. Equivalently, the number of plane
// trees that are valid for the word.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvalid/structures.hpp"
#include "pvalid/word.hpp"

namespace pvalid {

using ValidCount = boost::multiprecision::cpp_int;

/// Total: odd-length and unbalanced words give 0; the empty word gives 1.
ValidCount count_valid(const Word& p);

/// 64-bit variant for survey loops. Exact for words of length <= 64
/// (Catalan(32) fits); throws std::overflow_error beyond that.
std::uint64_t count_valid_u64(const Word& p);

/// Number of valid matchings containing every pair in `forced` (1-based).
/// Throws StructureError if a forced pair is out of range, overlaps another,
/// or joins non-complementary letters.
ValidCount count_valid_with_forced_pairs(const Word& p, const std::vector<PositionPair>& forced);

inline ValidCount count_valid_with_forced_pair(const Word& p, PositionPair forced) {
  return count_valid_with_forced_pairs(p, {forced});
}

struct Enumeration {
  std::vector<Matching> matchings;
  bool truncated = false;
};

/// All valid matchings in lexicographic order of their sorted pair lists,
/// stopping after `limit` results when given.
Enumeration enumerate_valid(const Word& p, std::optional<std::size_t> limit = std::nullopt);

ValidCount catalan(std::size_t n);

}  // namespace pvalid
