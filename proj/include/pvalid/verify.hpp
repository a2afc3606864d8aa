#pragma once

// Reproduction suites. Each returns a Report; failed checks are entries, not
// exceptions.

#include <cstddef>
#include <cstdint>

#include "pvalid/report.hpp"
#include "pvalid/survey.hpp"

namespace pvalid {

/// The two-block family: the recursion over [1, recursion_k_max]^2, the
/// closed form against the DP for k, l <= closed_form_max, and
/// count(P_{k,k}) = k + 1 for k in [1, diagonal_max].
Report verify_family_suite(std::size_t recursion_k_max = 8, std::size_t closed_form_max = 10,
                           std::size_t diagonal_max = 20);

/// check_R_monotone for n = 1..n_max at alphabet size m.
Report verify_monotone_suite(std::size_t n_max = 5, std::uint32_t m = 1,
                             const SurveyOptions& options = {});

}  // namespace pvalid
