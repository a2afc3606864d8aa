#include "pvalid/insertion.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "pvalid/errors.hpp"

namespace pvalid {

std::optional<TrackInstance> build_track(const Word& p, std::uint32_t base) {
  const auto stats = balance_stats(p);
  if (!stats.base_balanced(base)) {
    throw BalanceError("word is not balanced in base " + std::to_string(base + 1));
  }
  if (stats.of(base).plain == 0) return std::nullopt;

  TrackInstance track;
  std::size_t leading = 0;  // barred letters before the first station
  std::size_t running = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].base != base) continue;
    if (p[i].barred) {
      ++running;
    } else {
      if (track.station_positions.empty()) {
        leading = running;
      } else {
        track.gaps.push_back(running);
      }
      running = 0;
      track.station_positions.push_back(i + 1);
    }
  }
  track.gaps.push_back(running + leading);
  return track;
}

std::size_t find_start_station(const std::vector<std::size_t>& gaps) {
  if (gaps.empty()) throw std::invalid_argument("track has no stations");
  const std::size_t total = std::accumulate(gaps.begin(), gaps.end(), std::size_t{0});
  if (total != gaps.size()) throw std::invalid_argument("total fuel differs from track length");

  // Fuel on arrival at station t, starting empty at station 0, is
  // t - (gaps[0] + ... + gaps[t-1]). Any station where this is minimal works.
  std::ptrdiff_t level = 0;
  std::ptrdiff_t lowest = 0;
  std::size_t best = 0;
  for (std::size_t t = 1; t < gaps.size(); ++t) {
    level += 1 - static_cast<std::ptrdiff_t>(gaps[t - 1]);
    if (level < lowest) {
      lowest = level;
      best = t;
    }
  }
  return best + 1;
}

std::uint32_t default_base(const Word& p) {
  if (p.empty()) return 0;
  std::uint32_t base = p[0].base;
  for (const auto& x : p) base = std::min(base, x.base);
  return base;
}

InsertionResult insert_forced_pair(const Word& p, std::uint32_t base) {
  InsertionResult result;
  result.base = base;
  const auto track = build_track(p, base);
  if (track) {
    const std::size_t station = find_start_station(*track);
    result.station = station;
    result.position = track->station_positions[station - 1];
  }
  result.word = p.with_inserted(result.position - 1, {Letter{base, true}, Letter{base, false}});
  return result;
}

Word insert_pair_plain_first(const Word& p, std::uint32_t base) {
  const auto chosen = insert_forced_pair(p, base);
  return p.with_inserted(chosen.position - 1, {Letter{base, false}, Letter{base, true}});
}

MonotoneReport check_R_monotone(std::size_t n, std::uint32_t m, const SurveyOptions& options) {
  MonotoneReport report;
  report.n = n;
  report.m = m;
  SurveyOptions opts = options;
  opts.checkpoint.reset();
  opts.max_new_chunks.reset();
  const SurveyParams here(n, m);
  report.realizable = survey(here, opts).realizable();
  report.realizable_next = survey(SurveyParams(n + 1, m), opts).realizable();
  std::set_difference(report.realizable.begin(), report.realizable.end(),
                      report.realizable_next.begin(), report.realizable_next.end(),
                      std::back_inserter(report.missing));

  const std::uint64_t total = checked_word_space(here, opts);
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
#pragma omp parallel for schedule(static) reduction(+ : checked, failures)
  for (std::int64_t index = 0; index < static_cast<std::int64_t>(total); ++index) {
    const Word p = word_at(here, static_cast<std::uint64_t>(index));
    const std::uint64_t k = count_valid_u64(p);
    if (k == 0) continue;
    ++checked;
    if (count_valid_u64(insert_forced_pair(p).word) != k) {
      ++failures;
#pragma omp critical(monotone_examples)
      if (report.failure_examples.size() < 8) report.failure_examples.push_back(p);
    }
  }
  report.words_checked = checked;
  report.constructive_failures = failures;
  std::sort(report.failure_examples.begin(), report.failure_examples.end());
  return report;
}

OrderComparison compare_insertion_orders(std::size_t max_length, std::uint32_t m) {
  OrderComparison result;
  for (std::size_t n = 1; 2 * n <= max_length; ++n) {
    const SurveyParams params(n, m);
    const std::uint64_t total = *params.word_space_size();
    for (std::uint64_t index = 0; index < total; ++index) {
      const Word p = word_at(params, index);
      const std::uint64_t k = count_valid_u64(p);
      if (k == 0) continue;
      ++result.words;
      const std::uint32_t base = default_base(p);
      if (count_valid_u64(insert_forced_pair(p, base).word) == k) ++result.barred_first_preserved;
      if (count_valid_u64(insert_pair_plain_first(p, base)) == k) ++result.plain_first_preserved;
    }
  }
  return result;
}

}  // namespace pvalid
