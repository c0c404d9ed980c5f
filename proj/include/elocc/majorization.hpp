#pragma once

#include <cstddef>
#include <vector>

#include "elocc/prob_vector.hpp"

namespace elocc {

/// Exact value of Vidal's maximal conversion probability
/// P_max(x -> y) = min_l E_l(x)/E_l(y), together with a minimizing index.
struct PmaxResult {
  Rational value;
  std::size_t argmin_l = 0;            // smallest minimizing l, 1-based
  std::vector<std::size_t> skipped;    // indices l with E_l(y) = 0 (no constraint)
};

// Nielsen's criterion x -> y under LOCC: prefix sums of x never exceed those
// of y, totals equal. Shorter vector is zero-padded; totals must match.
bool majorizes(const ProbVector& x, const ProbVector& y);

// Indices m in 1..n where e_m(x) = e_m(y) (after padding). The boundary of
// S(y) is exactly the set of points with such a tie at some 1 <= m < n.
std::vector<std::size_t> majorization_ties(const ProbVector& x, const ProbVector& y);

// x strictly majorized by y: every prefix inequality strict, totals equal.
bool strictly_majorized(const ProbVector& x, const ProbVector& y);

// Super-majorization x %<^w y: E_l(x) >= E_l(y) for all 1 <= l <= n.
// Totals may differ (used with scaled targets).
bool super_majorized(const ProbVector& x, const ProbVector& y);

// All n suffix inequalities strict.
bool strictly_super_majorized(const ProbVector& x, const ProbVector& y);

// Requires both inputs normalized (total 1).
PmaxResult pmax(const ProbVector& x, const ProbVector& y);

}  // namespace elocc
