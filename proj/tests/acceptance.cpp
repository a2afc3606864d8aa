// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance            run criteria 1-10
//   acceptance --stretch  also run the resumable n=7, m=2 survey

#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "pvalid/cli.hpp"
#include "pvalid/counting.hpp"
#include "pvalid/families.hpp"
#include "pvalid/insertion.hpp"
#include "pvalid/structures.hpp"
#include "pvalid/survey.hpp"

using namespace pvalid;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = Outcome{false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = o.passed;
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    ok = false;
    o.detail += " (exceeded " + std::to_string(limit_seconds) + " s)";
  }
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << o.detail << " ["
            << seconds << " s]" << std::endl;
}

// Inserted pair stays count-preserving and is matched together in every
// valid matching of the result.
bool insertion_holds(const Word& p, std::string& why) {
  const auto r = insert_forced_pair(p);
  const auto before = count_valid(p);
  const auto after = enumerate_valid(r.word);
  if (ValidCount(after.matchings.size()) != before || count_valid(r.word) != before) {
    why = format_any_word(p) + ": count " + before.str() + " became " + count_valid(r.word).str();
    return false;
  }
  const PositionPair inserted{r.position, r.position + 1};
  for (const auto& m : after.matchings) {
    if (std::find(m.pairs.begin(), m.pairs.end(), inserted) == m.pairs.end()) {
      why = format_any_word(p) + ": inserted pair split in " + to_string(m);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const bool stretch = argc > 1 && std::strcmp(argv[1], "--stretch") == 0;
  std::cout.precision(3);

  criterion(1, "count BbaAAaaABbAaAa = 11", 1.0, [] {
    std::ostringstream out, err;
    const int status = run_cli({"count", "BbaAAaaABbAaAa"}, out, err);
    return Outcome{status == 0 && out.str() == "11\n", "cli printed " + out.str().substr(0, out.str().size() - 1)};
  });

  criterion(2, "forced B pairings give 7 + 4 = 11", 0, [] {
    const Word w = parse_word("BbaAAaaABbAaAa", 2);
    const ValidCount adjacent = count_valid_with_forced_pair(w, {1, 2});
    const ValidCount nested = count_valid_with_forced_pairs(w, {{1, 10}, {2, 9}});
    return Outcome{adjacent == 7 && nested == 4 && adjacent + nested == 11,
                   "adjacent " + adjacent.str() + ", nested " + nested.str()};
  });

  criterion(3, "11 not in R(7,1) by a full scan of 2^14 words", 60.0, [] {
    SurveyOptions opts;
    opts.prune = false;
    const auto h = survey(SurveyParams(7, 1), opts);
    const std::uint64_t n11 = h.counts.count(11) ? h.counts.at(11) : 0;
    return Outcome{h.scanned == 16384 && h.evaluated <= 16384 && n11 == 0 && h.complete,
                   "scanned " + std::to_string(h.scanned) + ", N(7,1,11) = " + std::to_string(n11)};
  });

  criterion(4, "count(P_{k,k}) = k+1 for k = 1..20", 10.0, [] {
    std::size_t bad = 0;
    for (std::size_t k = 1; k <= 20; ++k) bad += count_valid(family_word(FamilyParams(k, k))) == k + 1 ? 0 : 1;
    return Outcome{bad == 0, std::to_string(bad) + " mismatches"};
  });

  criterion(5, "family recursion holds on all 64 cells with k,l <= 8", 0, [] {
    const auto r = verify_family_recursion(8);
    return Outcome{r.entries.size() == 64 && r.failures() == 0,
                   std::to_string(r.entries.size()) + " cells, " + std::to_string(r.failures()) + " failures"};
  });

  criterion(6, "forced-pair insertion preserves counts and pairs itself", 0, [] {
    std::size_t exhaustive = 0;
    std::string why;
    for (std::size_t len = 0; len <= 10; len += 2) {
      for (const auto& p : oracle::all_words(len, 1)) {
        if (!is_balanced(p)) continue;
        ++exhaustive;
        if (!insertion_holds(p, why)) return Outcome{false, why};
      }
    }
    std::mt19937_64 rng(20150101);
    std::uniform_int_distribution<std::size_t> half(1, 6);
    for (int i = 0; i < 10000; ++i) {
      const Word p = oracle::random_balanced_word(rng, half(rng), 2);
      if (!insertion_holds(p, why)) return Outcome{false, why};
    }
    return Outcome{true, std::to_string(exhaustive) + " exhaustive (m=1) + 10000 sampled (m=2)"};
  });

  criterion(7, "R(n,1) in R(n+1,1) for n = 1..6", 120.0, [] {
    std::ostringstream detail;
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = check_R_monotone(n, 1);
      ok = ok && r.passed();
      detail << "n=" << n << ":" << r.realizable.size() << "->" << r.realizable_next.size()
             << (r.passed() ? " " : "(FAIL) ");
    }
    return Outcome{ok, detail.str() + "(|R| sizes)"};
  });

  criterion(8, "DP agrees with brute-force enumeration", 0, [] {
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= 8; ++len) {
      for (std::uint32_t m = 1; m <= 2; ++m) {
        for (const auto& w : oracle::all_words(len, m)) {
          ++checked;
          if (count_valid(w) != oracle::count(w)) return Outcome{false, "mismatch on " + format_word(w)};
        }
      }
    }
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> length(10, 12);
    std::uniform_int_distribution<std::uint32_t> alphabet(1, 2);
    std::size_t nonzero = 0;
    for (int i = 0; i < 10000; ++i) {
      const std::size_t len = length(rng);
      const std::uint32_t m = alphabet(rng);
      // Alternate uniform words with balanced ones so nonzero counts are exercised.
      const Word w = (i % 2 == 0 || len % 2 == 1) ? oracle::random_word(rng, len, m)
                                                   : oracle::random_balanced_word(rng, len / 2, m);
      const auto expected = oracle::count(w);
      nonzero += expected > 0 ? 1 : 0;
      if (count_valid(w) != expected) return Outcome{false, "mismatch on " + format_word(w)};
    }
    return Outcome{true, std::to_string(checked) + " exhaustive + 10000 random (" + std::to_string(nonzero) +
                             " nonzero), 0 discrepancies"};
  });

  criterion(9, "tree/matching bijection on all 132 objects at n = 6", 0, [] {
    const auto matchings = all_noncrossing_matchings(6);
    const auto trees = all_plane_trees(6);
    std::size_t bad = 0;
    for (const auto& m : matchings) bad += matching_from_tree(tree_from_matching(m)) == m ? 0 : 1;
    for (const auto& t : trees) bad += tree_from_matching(matching_from_tree(t)) == t ? 0 : 1;
    return Outcome{matchings.size() == 132 && trees.size() == 132 && bad == 0,
                   std::to_string(matchings.size()) + " matchings, " + std::to_string(trees.size()) +
                       " trees, " + std::to_string(bad) + " failures"};
  });

  criterion(10, "rotation and automorphism invariance", 0, [] {
    std::size_t rotations = 0;
    std::size_t images = 0;
    for (std::size_t len = 0; len <= 10; ++len) {
      for (const auto& w : oracle::all_words(len, 1)) {
        const ValidCount c = count_valid(w);
        for (std::size_t r = 1; r < len; ++r, ++rotations) {
          if (count_valid(w.rotated(r)) != c) return Outcome{false, "rotation of " + format_word(w)};
        }
      }
    }
    for (std::size_t len = 0; len <= 8; ++len) {
      for (std::uint32_t m = 1; m <= 2; ++m) {
        for (const auto& w : oracle::all_words(len, m)) {
          const ValidCount c = count_valid(w);
          for (const auto& image : oracle::orbit(w, m)) {
            ++images;
            if (count_valid(image) != c) return Outcome{false, "relabeling of " + format_word(w)};
          }
        }
      }
    }
    return Outcome{true, std::to_string(rotations) + " rotations, " + std::to_string(images) +
                             " relabelings, 0 exceptions"};
  });

  if (stretch) {
    criterion(11, "stretch: resumable n=7, m=2 survey realizes 11", 0, [] {
      const auto journal = std::filesystem::temp_directory_path() / "pvalid_stretch_7_2.ndjson";
      SurveyOptions opts;
      opts.checkpoint = journal;
      opts.chunk_words = std::uint64_t{1} << 22;
      const auto h = survey(SurveyParams(7, 2), opts);
      const bool has11 = h.counts.count(11) > 0;
      return Outcome{h.complete && has11 && h.scanned == (std::uint64_t{1} << 28),
                     "scanned " + std::to_string(h.scanned) + ", |R(7,2)| = " + std::to_string(h.realizable().size()) +
                         ", N(7,2,11) = " + (has11 ? std::to_string(h.counts.at(11)) : "0") + ", journal " +
                         journal.string()};
    });
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
