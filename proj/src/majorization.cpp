#include "elocc/majorization.hpp"

#include <cassert>
#include <utility>

#include "elocc/errors.hpp"

namespace elocc {

namespace {

std::pair<ProbVector, ProbVector> padded_pair(const ProbVector& x, const ProbVector& y) {
  std::size_t n = std::max(x.dim(), y.dim());
  return {x.padded(n), y.padded(n)};
}

}  // namespace

bool majorizes(const ProbVector& x, const ProbVector& y) {
  auto [a, b] = padded_pair(x, y);
  if (a.total() != b.total())
    fail(Errc::total_mismatch, "totals " + to_fraction(a.total()) + " vs " +
                                   to_fraction(b.total()));
  for (std::size_t m = 1; m < a.dim(); ++m)
    if (a.e_sum(m) > b.e_sum(m)) return false;
  return true;
}

std::vector<std::size_t> majorization_ties(const ProbVector& x, const ProbVector& y) {
  auto [a, b] = padded_pair(x, y);
  std::vector<std::size_t> ties;
  for (std::size_t m = 1; m <= a.dim(); ++m)
    if (a.e_sum(m) == b.e_sum(m)) ties.push_back(m);
  return ties;
}

bool strictly_majorized(const ProbVector& x, const ProbVector& y) {
  auto [a, b] = padded_pair(x, y);
  if (a.total() != b.total())
    fail(Errc::total_mismatch, "totals " + to_fraction(a.total()) + " vs " +
                                   to_fraction(b.total()));
  for (std::size_t m = 1; m < a.dim(); ++m)
    if (a.e_sum(m) >= b.e_sum(m)) return false;
  return true;
}

bool super_majorized(const ProbVector& x, const ProbVector& y) {
  auto [a, b] = padded_pair(x, y);
  for (std::size_t l = 1; l <= a.dim(); ++l)
    if (a.E_sum(l) < b.E_sum(l)) return false;
  return true;
}

bool strictly_super_majorized(const ProbVector& x, const ProbVector& y) {
  auto [a, b] = padded_pair(x, y);
  for (std::size_t l = 1; l <= a.dim(); ++l)
    if (a.E_sum(l) <= b.E_sum(l)) return false;
  return true;
}

PmaxResult pmax(const ProbVector& x, const ProbVector& y) {
  if (y.empty() || y.total() == 0)
    fail(Errc::target_is_zero_vector, "pmax target has zero total");
  if (x.total() != 1 || y.total() != 1)
    fail(Errc::precondition_violated, "pmax requires normalized inputs");
  auto [a, b] = padded_pair(x, y);
  PmaxResult result;
  bool have = false;
  for (std::size_t l = 1; l <= a.dim(); ++l) {
    Rational denom = b.E_sum(l);
    if (denom == 0) {
      result.skipped.push_back(l);
      continue;
    }
    Rational ratio = a.E_sum(l) / denom;
    if (!have || ratio < result.value) {
      result.value = std::move(ratio);
      result.argmin_l = l;
      have = true;
    }
  }
  // l = n always contributes ratio 1, so the minimum exists and is <= 1
  assert(have && result.value <= 1 && result.value >= 0);
  return result;
}

}  // namespace elocc
