#pragma once

// Exhaustive surveys of the word space: how many words of length 2n over m
// complementary pairs have exactly k valid matchings, for every k.
//
// Words are indexed lexicographically under A < a < B < b < ..., i.e. as
// base-2m numerals whose digits are letter codes, most significant first.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pvalid/report.hpp"
#include "pvalid/word.hpp"

namespace pvalid {

/// n >= 1, m >= 1, and 2n <= kMaxSurveyLength.
class SurveyParams {
 public:
  static constexpr std::size_t kMaxSurveyLength = 64;

  SurveyParams(std::size_t n, std::uint32_t m);

  std::size_t n() const noexcept { return n_; }
  std::uint32_t m() const noexcept { return m_; }
  std::size_t length() const noexcept { return 2 * n_; }

  /// (2m)^(2n), or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> word_space_size() const noexcept;

 private:
  std::size_t n_;
  std::uint32_t m_;
};

struct CountHistogram {
  std::size_t n = 0;
  std::uint32_t m = 0;
  /// k >= 1 -> number of words with exactly k valid matchings.
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t zero_count = 0;
  /// Words accounted for, orbit multiplicities included.
  std::uint64_t scanned = 0;
  /// Words whose count was actually evaluated.
  std::uint64_t evaluated = 0;
  /// False when a survey stopped early (see SurveyOptions::max_new_chunks).
  bool complete = true;

  void add(std::uint64_t k, std::uint64_t multiplicity);
  /// Commutative and associative; `complete` is left to the caller.
  void merge(const CountHistogram& other);

  std::set<std::uint64_t> realizable() const;

  /// Histogram contents compare equal; bookkeeping fields are ignored.
  bool same_counts(const CountHistogram& other) const {
    return counts == other.counts && zero_count == other.zero_count && scanned == other.scanned;
  }
};

struct SurveyOptions {
  /// 0 uses the OpenMP default.
  int workers = 0;
  /// Evaluate one word per alphabet-automorphism orbit.
  bool prune = true;
  /// Words per work unit and per journal record.
  std::uint64_t chunk_words = std::uint64_t{1} << 20;
  /// Refuse word spaces larger than this unless `force` is set.
  std::uint64_t budget = std::uint64_t{1} << 31;
  bool force = false;
  /// Newline-delimited JSON journal; existing records are resumed.
  std::optional<std::filesystem::path> checkpoint;
  /// Process at most this many not-yet-journaled chunks, then return an
  /// incomplete histogram.
  std::optional<std::uint64_t> max_new_chunks;
};

/// Throws BudgetError when the word space exceeds the budget (or 64 bits).
std::uint64_t checked_word_space(const SurveyParams& params, const SurveyOptions& options);

/// Parallel survey over contiguous chunks of the word space.
CountHistogram survey(const SurveyParams& params, const SurveyOptions& options = {});

/// Serial reference: every word, no pruning, exact big-integer counts.
CountHistogram survey_reference(const SurveyParams& params);

/// The word with the given lexicographic index.
Word word_at(const SurveyParams& params, std::uint64_t index);

/// Lexicographically smallest word in the orbit of p under base
/// permutations and per-base polarity swaps.
Word canonical_form(const Word& p, std::uint32_t m);

/// Orbit size of p under the automorphism group of an alphabet of size m:
/// m!/(m-u)! * 2^u, u the number of distinct bases in p.
std::uint64_t orbit_size(const Word& p, std::uint32_t m);

/// Up to `limit` words with exactly k valid matchings, in lexicographic order.
std::vector<Word> find_witnesses(const SurveyParams& params, std::uint64_t k, std::size_t limit,
                                 const SurveyOptions& options = {});

/// The word behind the counterexample: its count, the 7 + 4 split by how
/// the B letters pair up, and 11 missing from the single-pair survey at n = 7.
Report verify_counterexample(const SurveyOptions& options = {});

}  // namespace pvalid
