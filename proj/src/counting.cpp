#include "pvalid/counting.hpp"

#include <functional>
#include <stdexcept>

#include "pvalid/detail/interval_dp.hpp"
#include "pvalid/errors.hpp"

namespace pvalid {

namespace {

std::vector<std::uint32_t> codes_of(const Word& p) {
  std::vector<std::uint32_t> codes;
  codes.reserve(p.size());
  for (const auto& x : p) codes.push_back(x.code());
  return codes;
}

}  // namespace

ValidCount count_valid(const Word& p) {
  if (!is_balanced(p)) return 0;
  const auto codes = codes_of(p);
  std::vector<ValidCount> table((codes.size() + 1) * (codes.size() + 1));
  return detail::interval_count<ValidCount, std::uint32_t>(codes, table);
}

std::uint64_t count_valid_u64(const Word& p) {
  if (p.size() > 64) throw std::overflow_error("count_valid_u64 supports words of length <= 64");
  if (!is_balanced(p)) return 0;
  const auto codes = codes_of(p);
  std::vector<std::uint64_t> table((codes.size() + 1) * (codes.size() + 1));
  return detail::interval_count<std::uint64_t, std::uint32_t>(codes, table);
}

ValidCount count_valid_with_forced_pairs(const Word& p, const std::vector<PositionPair>& forced) {
  std::vector<std::size_t> partner(p.size(), detail::kFree);
  for (auto [a, b] : forced) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > p.size() || a == b) {
      throw StructureError("forced pair (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range for word of length " + std::to_string(p.size()));
    }
    if (!are_complementary(p[a - 1], p[b - 1])) {
      throw StructureError("forced pair (" + std::to_string(a) + "," + std::to_string(b) +
                           ") joins non-complementary letters");
    }
    if (partner[a - 1] != detail::kFree || partner[b - 1] != detail::kFree) {
      throw StructureError("forced pairs overlap at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
    }
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  if (!is_balanced(p)) return 0;
  const auto codes = codes_of(p);
  std::vector<ValidCount> table((codes.size() + 1) * (codes.size() + 1));
  return detail::interval_count<ValidCount, std::uint32_t>(codes, table, partner);
}

Enumeration enumerate_valid(const Word& p, std::optional<std::size_t> limit) {
  Enumeration result;
  const std::size_t len = p.size();
  if (!is_balanced(p)) return result;
  if (limit && *limit == 0) {
    result.truncated = count_valid(p) > 0;
    return result;
  }

  // Feasibility table prunes dead branches so the DFS only walks witnesses.
  const auto codes = codes_of(p);
  const std::size_t stride = len + 1;
  std::vector<std::uint8_t> ok(stride * stride, 0);
  for (std::size_t i = 0; i <= len; ++i) ok[i * stride + i] = 1;
  for (std::size_t width = 2; width <= len; width += 2) {
    for (std::size_t i = 0; i + width <= len; ++i) {
      const std::size_t j = i + width;
      for (std::size_t k = i + 1; k < j; k += 2) {
        if (detail::complementary_codes(codes[i], codes[k]) && ok[(i + 1) * stride + k] &&
            ok[(k + 1) * stride + j]) {
          ok[i * stride + j] = 1;
          break;
        }
      }
    }
  }
  if (!ok[len]) return result;

  // Decisions are taken in increasing position order with ascending partners,
  // so results come out in lexicographic order.
  std::vector<PositionPair> chosen;
  bool stop = false;
  using Pending = std::vector<std::pair<std::size_t, std::size_t>>;
  std::function<void(Pending)> dfs = [&](Pending pending) {
    while (!pending.empty() && pending.back().first == pending.back().second) pending.pop_back();
    if (pending.empty()) {
      if (limit && result.matchings.size() == *limit) {
        result.truncated = true;
        stop = true;
        return;
      }
      result.matchings.emplace_back(chosen);
      return;
    }
    const auto [i, j] = pending.back();
    pending.pop_back();
    for (std::size_t k = i + 1; k < j && !stop; k += 2) {
      if (!detail::complementary_codes(codes[i], codes[k])) continue;
      if (!ok[(i + 1) * stride + k] || !ok[(k + 1) * stride + j]) continue;
      chosen.emplace_back(i + 1, k + 1);
      Pending next = pending;
      next.emplace_back(k + 1, j);
      next.emplace_back(i + 1, k);
      dfs(std::move(next));
      chosen.pop_back();
    }
  };
  dfs(Pending{{0, len}});
  return result;
}

ValidCount catalan(std::size_t n) {
  ValidCount c = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return c;
}

}  // namespace pvalid
