#include "pvalid/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace pvalid {

FamilyParams::FamilyParams(std::size_t k, std::size_t l) : k_(k), l_(l) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters must satisfy k, l >= 1");
}

Word family_word_extended(std::size_t k, std::size_t l) {
  std::vector<Letter> letters;
  letters.reserve(2 * (k + l));
  const Letter plain{0, false};
  const Letter barred{0, true};
  letters.insert(letters.end(), k, plain);
  letters.insert(letters.end(), k, barred);
  letters.insert(letters.end(), l, plain);
  letters.insert(letters.end(), l, barred);
  return Word(std::move(letters));
}

Word family_word(const FamilyParams& params) { return family_word_extended(params.k(), params.l()); }

ValidCount family_count_closed_form(const FamilyParams& params) {
  return ValidCount(std::min(params.k(), params.l()) + 1);
}

std::size_t RecursionReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const RecursionEntry& e) { return !e.passed; }));
}

RecursionReport verify_family_recursion(std::size_t k_max) {
  RecursionReport report;
  report.k_max = k_max;
  const std::size_t cells = k_max * k_max;
  report.entries.resize(cells);

  // Cells are independent; each writes only its own slot, so the report
  // order is fixed by (k, l) regardless of scheduling.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(cells); ++idx) {
    const std::size_t k = static_cast<std::size_t>(idx) / k_max + 1;
    const std::size_t l = static_cast<std::size_t>(idx) % k_max + 1;
    RecursionEntry e;
    e.k = k;
    e.l = l;
    e.lhs = count_valid(family_word_extended(k, l));
    if (k > l) {
      e.which = RecursionCase::KGreater;
      e.rhs = count_valid(family_word_extended(k - 1, l));
    } else if (l > k) {
      e.which = RecursionCase::LGreater;
      e.rhs = count_valid(family_word_extended(k, l - 1));
    } else {
      e.which = RecursionCase::Equal;
      e.rhs = 1 + count_valid(family_word_extended(k, l - 1));
      e.uses_l_zero = (l - 1 == 0);
    }
    e.passed = e.lhs == e.rhs;
    report.entries[static_cast<std::size_t>(idx)] = std::move(e);
  }
  return report;
}

std::string to_string(RecursionCase c) {
  switch (c) {
    case RecursionCase::KGreater: return "k>l";
    case RecursionCase::LGreater: return "l>k";
    case RecursionCase::Equal: return "k=l";
  }
  return "?";
}

}  // namespace pvalid
