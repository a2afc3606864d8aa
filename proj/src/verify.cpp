#include "pvalid/verify.hpp"

#include <sstream>

#include "pvalid/families.hpp"
#include "pvalid/insertion.hpp"

namespace pvalid {

namespace {

std::string join(const std::set<std::uint64_t>& values) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

Report verify_family_suite(std::size_t recursion_k_max, std::size_t closed_form_max,
                           std::size_t diagonal_max) {
  Report report;
  report.suite = "family";

  const auto recursion = verify_family_recursion(recursion_k_max);
  std::size_t extended = 0;
  for (const auto& e : recursion.entries) extended += e.uses_l_zero ? 1 : 0;
  std::ostringstream detail;
  detail << recursion.entries.size() << " cells, " << recursion.failures() << " failures";
  if (extended) detail << " (" << extended << " used the P_{k,0} base)";
  for (const auto& e : recursion.entries) {
    if (!e.passed) {
      detail << "; (" << e.k << "," << e.l << ") " << to_string(e.which) << ": " << e.lhs.str()
             << " != " << e.rhs.str();
    }
  }
  report.add("recursion for k,l <= " + std::to_string(recursion_k_max), recursion.failures() == 0,
             detail.str());

  std::size_t mismatches = 0;
  for (std::size_t k = 1; k <= closed_form_max; ++k) {
    for (std::size_t l = 1; l <= closed_form_max; ++l) {
      const FamilyParams params(k, l);
      if (count_valid(family_word(params)) != family_count_closed_form(params)) ++mismatches;
    }
  }
  report.add("closed form min(k,l)+1 for k,l <= " + std::to_string(closed_form_max), mismatches == 0,
             std::to_string(mismatches) + " mismatches");

  std::size_t diagonal_failures = 0;
  std::ostringstream witnesses;
  for (std::size_t k = 1; k <= diagonal_max; ++k) {
    const ValidCount c = count_valid(family_word(FamilyParams(k, k)));
    if (c != k + 1) {
      ++diagonal_failures;
      witnesses << " k=" << k << " gave " << c.str();
    }
  }
  report.add("count(P_{k,k}) = k+1 for k <= " + std::to_string(diagonal_max), diagonal_failures == 0,
             diagonal_failures ? witnesses.str() : "k+1 in R(2k,1) for every k checked");

  report.verdict = report.passed() ? "every positive integer up to " + std::to_string(diagonal_max + 1) +
                                         " is realized over a single pair"
                                   : "family checks failed";
  return report;
}

Report verify_monotone_suite(std::size_t n_max, std::uint32_t m, const SurveyOptions& options) {
  Report report;
  report.suite = "monotone";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto r = check_R_monotone(n, m, options);
    std::ostringstream detail;
    detail << "R(" << n << "," << m << ") = " << join(r.realizable) << ", R(" << n + 1 << "," << m
           << ") = " << join(r.realizable_next) << "; " << r.words_checked
           << " insertions, " << r.constructive_failures << " changed the count";
    report.add("R(" + std::to_string(n) + "," + std::to_string(m) + ") in R(" +
                   std::to_string(n + 1) + "," + std::to_string(m) + ")",
               r.passed(), detail.str());
  }
  report.verdict = report.passed() ? "inclusion and count-preserving insertion hold on every size checked"
                                   : "monotonicity check failed";
  return report;
}

}  // namespace pvalid
