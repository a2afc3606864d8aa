#pragma once

// Newline-delimited JSON checkpoint journal for resumable surveys.
//
//   {"kind":"pvalid-survey-journal","version":1,"n":7,"m":2,"prune":true,
//    "chunk_words":"1048576","total_words":"268435456"}
//   {"chunk":0,"first":"0","last":"1048575","scanned":"...","evaluated":"...",
//    "zero":"...","histogram":{"1":"...","2":"..."}}
//   ...
//
// The first line identifies the survey; every further line is one completed
// chunk. Large integers are decimal strings. A truncated final line (from an
// interrupted write) is ignored on load.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "pvalid/survey.hpp"

namespace pvalid {

struct JournalHeader {
  std::size_t n = 0;
  std::uint32_t m = 0;
  bool prune = true;
  std::uint64_t chunk_words = 0;
  std::uint64_t total_words = 0;

  friend bool operator==(const JournalHeader&, const JournalHeader&) = default;
};

class SurveyJournal {
 public:
  /// Opens or creates the journal. Throws JournalError when an existing
  /// journal belongs to a different survey or is corrupt before its last line.
  SurveyJournal(const std::filesystem::path& path, const JournalHeader& header);

  const std::map<std::uint64_t, CountHistogram>& completed() const noexcept { return completed_; }

  /// Appends and flushes one chunk record. Not thread-safe.
  void append(std::uint64_t chunk, std::uint64_t first, std::uint64_t last,
              const CountHistogram& partial);

 private:
  std::filesystem::path path_;
  JournalHeader header_;
  std::map<std::uint64_t, CountHistogram> completed_;
  std::ofstream out_;
};

std::string header_line(const JournalHeader& header);
std::string chunk_line(std::uint64_t chunk, std::uint64_t first, std::uint64_t last,
                       const CountHistogram& partial);

}  // namespace pvalid
