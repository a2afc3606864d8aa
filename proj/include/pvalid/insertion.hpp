#pragma once

// Count-preserving insertion of a complementary pair.
//
// The plain occurrences of one base become gas stations on a circular track;
// the barred occurrences between consecutive stations are the distances.
// Inserting "barred, plain" just before a station from which the circuit can
// be completed forces the two new letters to pair with each other.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pvalid/counting.hpp"
#include "pvalid/survey.hpp"
#include "pvalid/word.hpp"

namespace pvalid {

struct TrackInstance {
  /// 1-based word positions of the plain letters, left to right.
  std::vector<std::size_t> station_positions;
  /// gaps[i]: barred letters between station i and station i+1, the last
  /// entry wrapping around the end of the word.
  std::vector<std::size_t> gaps;
};

/// nullopt when the base does not occur. Throws BalanceError if the word is
/// unbalanced in that base.
std::optional<TrackInstance> build_track(const Word& p, std::uint32_t base);

/// 1-based station index from which a unit-fuel circuit never runs dry;
/// the earliest one when several qualify. Requires sum(gaps) == gaps.size().
std::size_t find_start_station(const std::vector<std::size_t>& gaps);

inline std::size_t find_start_station(const TrackInstance& track) {
  return find_start_station(track.gaps);
}

/// Smallest base index occurring in p (0 for the empty word).
std::uint32_t default_base(const Word& p);

struct InsertionResult {
  Word word;
  /// 1-based position in the original word the pair was inserted before.
  std::size_t position = 1;
  /// 1-based station index, or nullopt when the base was absent.
  std::optional<std::size_t> station;
  std::uint32_t base = 0;
};

/// Inserts complement(base) then base before the chosen station. When the
/// base is absent the pair goes to the front. Throws BalanceError if p is
/// unbalanced in the base.
InsertionResult insert_forced_pair(const Word& p, std::uint32_t base);

inline InsertionResult insert_forced_pair(const Word& p) {
  return insert_forced_pair(p, default_base(p));
}

/// Same location, opposite letter order (plain then barred).
Word insert_pair_plain_first(const Word& p, std::uint32_t base);

struct MonotoneReport {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::set<std::uint64_t> realizable;       // R(n, m)
  std::set<std::uint64_t> realizable_next;  // R(n + 1, m)
  std::vector<std::uint64_t> missing;       // R(n, m) minus R(n + 1, m)
  /// Words with a nonzero count that went through insert_forced_pair.
  std::uint64_t words_checked = 0;
  std::uint64_t constructive_failures = 0;
  /// First few words whose inserted pair changed the count.
  std::vector<Word> failure_examples;

  bool inclusion_holds() const noexcept { return missing.empty(); }
  bool passed() const noexcept { return inclusion_holds() && constructive_failures == 0; }
};

/// Surveys (n, m) and (n + 1, m), checks R(n, m) is contained in R(n + 1, m),
/// and checks that insert_forced_pair keeps the count of every word of
/// length 2n that has one.
MonotoneReport check_R_monotone(std::size_t n, std::uint32_t m, const SurveyOptions& options = {});

struct OrderComparison {
  std::uint64_t words = 0;                  // balanced words with count > 0
  std::uint64_t barred_first_preserved = 0;
  std::uint64_t plain_first_preserved = 0;
};

/// Both insertion orders over every balanced word of length <= max_length
/// on m pairs, with the default base.
OrderComparison compare_insertion_orders(std::size_t max_length, std::uint32_t m);

}  // namespace pvalid
