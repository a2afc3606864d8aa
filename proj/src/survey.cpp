#include "pvalid/survey.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <span>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pvalid/counting.hpp"
#include "pvalid/detail/interval_dp.hpp"
#include "pvalid/errors.hpp"
#include "pvalid/journal.hpp"

namespace pvalid {

SurveyParams::SurveyParams(std::size_t n, std::uint32_t m) : n_(n), m_(m) {
  if (n == 0 || m == 0) throw std::invalid_argument("survey requires n >= 1 and m >= 1");
  if (2 * n > kMaxSurveyLength) {
    throw std::invalid_argument("survey word length is limited to " +
                                std::to_string(kMaxSurveyLength));
  }
}

std::optional<std::uint64_t> SurveyParams::word_space_size() const noexcept {
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(m_);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / radix) return std::nullopt;
    total *= radix;
  }
  return total;
}

void CountHistogram::add(std::uint64_t k, std::uint64_t multiplicity) {
  scanned += multiplicity;
  if (k == 0) {
    zero_count += multiplicity;
  } else {
    counts[k] += multiplicity;
  }
}

void CountHistogram::merge(const CountHistogram& other) {
  for (const auto& [k, c] : other.counts) counts[k] += c;
  zero_count += other.zero_count;
  scanned += other.scanned;
  evaluated += other.evaluated;
}

std::set<std::uint64_t> CountHistogram::realizable() const {
  std::set<std::uint64_t> r;
  for (const auto& [k, c] : counts) {
    if (c > 0) r.insert(k);
  }
  return r;
}

std::uint64_t checked_word_space(const SurveyParams& params, const SurveyOptions& options) {
  const auto total = params.word_space_size();
  if (!total) {
    throw BudgetError("word space (2m)^(2n) with n=" + std::to_string(params.n()) +
                      ", m=" + std::to_string(params.m()) + " exceeds 2^64 words");
  }
  if (*total > options.budget && !options.force) {
    throw BudgetError("word space has " + std::to_string(*total) + " words, above the budget of " +
                      std::to_string(options.budget) + "; pass --force to run anyway");
  }
  return *total;
}

Word word_at(const SurveyParams& params, std::uint64_t index) {
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(params.m());
  std::vector<Letter> letters(params.length());
  for (std::size_t i = letters.size(); i-- > 0;) {
    letters[i] = Letter::from_code(static_cast<std::uint32_t>(index % radix));
    index /= radix;
  }
  return Word(std::move(letters));
}

Word canonical_form(const Word& p, [[maybe_unused]] std::uint32_t m) {
  // Greedy relabel: each new base takes the next unused index and its first
  // occurrence becomes plain. Earlier positions dominate the order and a new
  // base can never map onto an index already taken, so this is the minimum.
  struct Image {
    std::uint32_t base;
    bool swap;
  };
  std::map<std::uint32_t, Image> image;
  std::uint32_t next = 0;
  std::vector<Letter> out;
  out.reserve(p.size());
  for (const auto& x : p) {
    auto it = image.find(x.base);
    if (it == image.end()) it = image.emplace(x.base, Image{next++, x.barred}).first;
    out.push_back(Letter{it->second.base, x.barred != it->second.swap});
  }
  return Word(std::move(out));
}

std::uint64_t orbit_size(const Word& p, std::uint32_t m) {
  std::set<std::uint32_t> bases;
  for (const auto& x : p) bases.insert(x.base);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < bases.size(); ++i) size *= 2 * static_cast<std::uint64_t>(m - i);
  return size;
}

namespace {

// Per-thread state for scanning a contiguous index range.
class ChunkScanner {
 public:
  explicit ChunkScanner(const SurveyParams& params)
      : len_(params.length()),
        radix_(2 * params.m()),
        m_(params.m()),
        digits_(len_),
        balance_(params.m(), 0),
        relabel_(params.m(), kUnseen),
        table_((len_ + 1) * (len_ + 1)),
        multiplicity_(std::min<std::size_t>(params.m(), len_) + 1) {
    multiplicity_[0] = 1;
    for (std::size_t u = 1; u < multiplicity_.size(); ++u) {
      multiplicity_[u] = multiplicity_[u - 1] * 2 * (m_ - (u - 1));
    }
  }

  void seek(std::uint64_t index) {
    for (std::size_t i = len_; i-- > 0;) {
      digits_[i] = static_cast<std::uint32_t>(index % radix_);
      index /= radix_;
    }
  }

  void advance() {
    for (std::size_t i = len_; i-- > 0;) {
      if (++digits_[i] < radix_) return;
      digits_[i] = 0;
    }
  }

  std::span<const std::uint32_t> digits() const noexcept { return digits_; }

  bool balanced() {
    bool ok = true;
    for (auto c : digits_) balance_[c >> 1] += (c & 1) ? -1 : 1;
    for (auto c : digits_) {
      if (balance_[c >> 1] != 0) ok = false;
      balance_[c >> 1] = 0;
    }
    return ok;
  }

  /// Orbit multiplicity when the current word is its orbit's canonical
  /// representative, 0 otherwise.
  std::uint64_t canonical_multiplicity() {
    std::uint32_t next = 0;
    bool ok = true;
    for (auto c : digits_) {
      const std::uint32_t base = c >> 1;
      if (relabel_[base] == kUnseen) {
        if (base != next || (c & 1)) {
          ok = false;
          break;
        }
        relabel_[base] = next++;
      }
    }
    for (auto c : digits_) relabel_[c >> 1] = kUnseen;
    return ok ? multiplicity_[next] : 0;
  }

  std::uint64_t count() {
    return detail::interval_count<std::uint64_t, std::uint32_t>(digits_, table_);
  }

  Word word() const {
    std::vector<Letter> letters;
    letters.reserve(len_);
    for (auto c : digits_) letters.push_back(Letter::from_code(c));
    return Word(std::move(letters));
  }

 private:
  static constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  std::size_t len_;
  std::uint32_t radix_;
  std::uint32_t m_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::int32_t> balance_;
  std::vector<std::uint32_t> relabel_;
  std::vector<std::uint64_t> table_;
  std::vector<std::uint64_t> multiplicity_;
};

CountHistogram scan_chunk(const SurveyParams& params, std::uint64_t first, std::uint64_t end,
                          bool prune) {
  CountHistogram h;
  h.n = params.n();
  h.m = params.m();
  ChunkScanner scan(params);
  scan.seek(first);
  for (std::uint64_t index = first; index < end; ++index, scan.advance()) {
    std::uint64_t weight = 1;
    if (prune) {
      weight = scan.canonical_multiplicity();
      if (weight == 0) continue;
    }
    if (!scan.balanced()) {
      h.add(0, weight);
      continue;
    }
    ++h.evaluated;
    h.add(scan.count(), weight);
  }
  return h;
}

int thread_count(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace

CountHistogram survey(const SurveyParams& params, const SurveyOptions& options) {
  const std::uint64_t total = checked_word_space(params, options);
  const std::uint64_t chunk_words = std::max<std::uint64_t>(1, options.chunk_words);
  const std::uint64_t chunks = (total + chunk_words - 1) / chunk_words;

  std::optional<SurveyJournal> journal;
  if (options.checkpoint) {
    journal.emplace(*options.checkpoint,
                    JournalHeader{params.n(), params.m(), options.prune, chunk_words, total});
  }

  std::vector<std::uint64_t> todo;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (journal && journal->completed().count(c)) continue;
    if (options.max_new_chunks && todo.size() >= *options.max_new_chunks) break;
    todo.push_back(c);
  }

  std::vector<CountHistogram> partials(todo.size());
  std::exception_ptr failure;
  std::mutex journal_mutex;
  const int threads = thread_count(options.workers);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(todo.size()); ++i) {
    const std::uint64_t c = todo[static_cast<std::size_t>(i)];
    const std::uint64_t first = c * chunk_words;
    const std::uint64_t end = std::min(first + chunk_words, total);
    auto partial = scan_chunk(params, first, end, options.prune);
    if (journal) {
      std::lock_guard lock(journal_mutex);
      try {
        journal->append(c, first, end - 1, partial);
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    partials[static_cast<std::size_t>(i)] = std::move(partial);
  }
  if (failure) std::rethrow_exception(failure);

  CountHistogram result;
  result.n = params.n();
  result.m = params.m();
  std::uint64_t covered = todo.size();
  if (journal) {
    for (const auto& [c, partial] : journal->completed()) {
      if (!std::binary_search(todo.begin(), todo.end(), c)) {
        result.merge(partial);
        ++covered;
      }
    }
  }
  for (const auto& partial : partials) result.merge(partial);
  result.complete = covered == chunks;
  return result;
}

CountHistogram survey_reference(const SurveyParams& params) {
  const auto total = params.word_space_size();
  if (!total) throw BudgetError("word space exceeds 2^64 words");
  CountHistogram h;
  h.n = params.n();
  h.m = params.m();
  for (std::uint64_t index = 0; index < *total; ++index) {
    const ValidCount k = count_valid(word_at(params, index));
    ++h.evaluated;
    h.add(k.convert_to<std::uint64_t>(), 1);
  }
  return h;
}

std::vector<Word> find_witnesses(const SurveyParams& params, std::uint64_t k, std::size_t limit,
                                 const SurveyOptions& options) {
  std::vector<Word> found;
  if (limit == 0) return found;
  const std::uint64_t total = checked_word_space(params, options);
  const std::uint64_t chunk_words = std::max<std::uint64_t>(1, options.chunk_words);
  const std::uint64_t chunks = (total + chunk_words - 1) / chunk_words;
  const int threads = thread_count(options.workers);
  const std::uint64_t batch = static_cast<std::uint64_t>(threads) * 2;

  // Chunks run in parallel in batches; results are appended in chunk order so
  // the output is the lexicographic prefix regardless of scheduling.
  for (std::uint64_t start = 0; start < chunks && found.size() < limit; start += batch) {
    const std::uint64_t stop = std::min(chunks, start + batch);
    std::vector<std::vector<Word>> per_chunk(stop - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(stop - start); ++i) {
      const std::uint64_t first = (start + static_cast<std::uint64_t>(i)) * chunk_words;
      const std::uint64_t end = std::min(first + chunk_words, total);
      auto& out = per_chunk[static_cast<std::size_t>(i)];
      ChunkScanner scan(params);
      scan.seek(first);
      for (std::uint64_t index = first; index < end && out.size() < limit; ++index, scan.advance()) {
        const std::uint64_t count = scan.balanced() ? scan.count() : 0;
        if (count == k) out.push_back(scan.word());
      }
    }
    for (auto& words : per_chunk) {
      for (auto& w : words) {
        if (found.size() == limit) break;
        found.push_back(std::move(w));
      }
    }
  }
  return found;
}

Report verify_counterexample(const SurveyOptions& options) {
  Report report;
  report.suite = "counterexample";
  const Word word = parse_word("BbaAAaaABbAaAa", 2);

  const ValidCount total = count_valid(word);
  report.add("count BbaAAaaABbAaAa = 11", total == 11, "count_valid = " + total.str());

  // B occupies positions 1 and 9, b positions 2 and 10. Either both B
  // pairs are adjacent, or they nest around the middle.
  const ValidCount adjacent = count_valid_with_forced_pairs(word, {{1, 2}, {9, 10}});
  const ValidCount nested = count_valid_with_forced_pairs(word, {{1, 10}, {2, 9}});
  report.add("B pairings split 7 + 4", adjacent == 7 && nested == 4 && adjacent + nested == total,
             "adjacent = " + adjacent.str() + ", nested = " + nested.str());

  SurveyOptions opts = options;
  opts.checkpoint.reset();
  opts.max_new_chunks.reset();
  const auto hist = survey(SurveyParams(7, 1), opts);
  const bool absent = hist.counts.count(11) == 0;
  report.add("11 not in R(7,1)", absent && hist.scanned == 16384 && hist.complete,
             "scanned " + std::to_string(hist.scanned) + " words, N(7,1,11) = " +
                 std::to_string(absent ? 0 : hist.counts.at(11)));

  report.verdict = report.passed()
                       ? "R(7,2) contains 11 but R(7,1) does not: R(n,m) = R(n,1) fails at n = 7"
                       : "counterexample not reproduced";
  return report;
}

}  // namespace pvalid
