#include "pvalid/journal.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "pvalid/errors.hpp"

namespace pvalid {

namespace {

using nlohmann::json;

constexpr const char* kKind = "pvalid-survey-journal";
constexpr int kVersion = 1;

std::uint64_t as_u64(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return std::stoull(v.get<std::string>());
  return v.get<std::uint64_t>();
}

JournalHeader parse_header(const std::string& line) {
  const json j = json::parse(line);
  if (j.value("kind", "") != kKind) throw JournalError("not a survey journal");
  if (j.value("version", 0) != kVersion) throw JournalError("unsupported journal version");
  JournalHeader h;
  h.n = j.at("n").get<std::size_t>();
  h.m = j.at("m").get<std::uint32_t>();
  h.prune = j.at("prune").get<bool>();
  h.chunk_words = as_u64(j, "chunk_words");
  h.total_words = as_u64(j, "total_words");
  return h;
}

}  // namespace

std::string header_line(const JournalHeader& header) {
  json j;
  j["kind"] = kKind;
  j["version"] = kVersion;
  j["n"] = header.n;
  j["m"] = header.m;
  j["prune"] = header.prune;
  j["chunk_words"] = std::to_string(header.chunk_words);
  j["total_words"] = std::to_string(header.total_words);
  return j.dump();
}

std::string chunk_line(std::uint64_t chunk, std::uint64_t first, std::uint64_t last,
                       const CountHistogram& partial) {
  json j;
  j["chunk"] = chunk;
  j["first"] = std::to_string(first);
  j["last"] = std::to_string(last);
  j["scanned"] = std::to_string(partial.scanned);
  j["evaluated"] = std::to_string(partial.evaluated);
  j["zero"] = std::to_string(partial.zero_count);
  json hist = json::object();
  for (const auto& [k, count] : partial.counts) hist[std::to_string(k)] = std::to_string(count);
  j["histogram"] = std::move(hist);
  return j.dump();
}

SurveyJournal::SurveyJournal(const std::filesystem::path& path, const JournalHeader& header)
    : path_(path), header_(header) {
  bool fresh = true;
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) lines.push_back(line);
    }
    if (!lines.empty()) {
      fresh = false;
      JournalHeader existing;
      try {
        existing = parse_header(lines.front());
      } catch (const json::exception& e) {
        throw JournalError(path.string() + ": unreadable header: " + e.what());
      }
      if (!(existing == header)) {
        throw JournalError(path.string() + ": journal belongs to a different survey");
      }
      for (std::size_t i = 1; i < lines.size(); ++i) {
        try {
          const json j = json::parse(lines[i]);
          CountHistogram partial;
          partial.n = header.n;
          partial.m = header.m;
          partial.scanned = as_u64(j, "scanned");
          partial.evaluated = as_u64(j, "evaluated");
          partial.zero_count = as_u64(j, "zero");
          for (const auto& [k, count] : j.at("histogram").items()) {
            partial.counts[std::stoull(k)] = std::stoull(count.get<std::string>());
          }
          completed_[j.at("chunk").get<std::uint64_t>()] = std::move(partial);
        } catch (const std::exception& e) {
          if (i + 1 == lines.size()) break;  // torn final write
          throw JournalError(path.string() + ": corrupt record on line " + std::to_string(i + 1) +
                             ": " + e.what());
        }
      }
    }
  }
  if (fresh) {
    out_.open(path, std::ios::trunc);
    if (!out_) throw JournalError("cannot create journal " + path.string());
    out_ << header_line(header) << '\n';
    out_.flush();
  } else {
    // Rewrite without a torn tail so later appends start on a clean line.
    std::vector<std::string> keep{header_line(header)};
    for (const auto& [chunk, partial] : completed_) {
      const std::uint64_t first = chunk * header.chunk_words;
      const std::uint64_t last = std::min(first + header.chunk_words, header.total_words) - 1;
      keep.push_back(chunk_line(chunk, first, last, partial));
    }
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream rewrite(tmp, std::ios::trunc);
      for (const auto& l : keep) rewrite << l << '\n';
    }
    std::filesystem::rename(tmp, path);
    out_.open(path, std::ios::app);
    if (!out_) throw JournalError("cannot append to journal " + path.string());
  }
}

void SurveyJournal::append(std::uint64_t chunk, std::uint64_t first, std::uint64_t last,
                           const CountHistogram& partial) {
  out_ << chunk_line(chunk, first, last, partial) << '\n';
  out_.flush();
  completed_[chunk] = partial;
}

}  // namespace pvalid
