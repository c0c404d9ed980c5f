#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elocc/majorization.hpp"

namespace elocc {

/// The unique split of a sorted positive vector c into maximal blocks whose
/// internal adjacent ratios all exceed alpha, with cross-block gaps <= alpha.
struct SegmentDecomposition {
  Rational alpha;
  std::vector<Segment> blocks;  // concatenation equals c, in order
};

/// y(d): the two-level flattening of y, averaging the top d and the
/// remaining n-d components. Lies on the boundary of S(y) (tie at prefix d).
struct FlatTarget {
  std::size_t d = 0;
  ProbVector vector;
};

/// One exact comparison recorded while certifying a decision.
struct Inequality {
  std::string label;
  Rational lhs;
  Rational rhs;
  char rel = '<';  // '<' or '>'

  bool holds() const { return rel == '<' ? lhs < rhs : lhs > rhs; }
};

/// Evidence that catalysis (or k copies) helps for a target: the split index
/// d, a boundary witness in K_d(y), an optional constructed catalyst, and the
/// strict inequalities that were verified along the way.
struct UsefulnessCertificate {
  std::size_t d = 0;
  ProbVector witness;
  std::optional<ProbVector> catalyst;
  std::optional<Segment> segment;  // certifying segment, when one was located
  std::vector<Inequality> transcript;
};

// --- decomposition and split geometry ---------------------------------------

// Greedy scan over sorted c, breaking between i and i+1 whenever
// c_{i+1}/c_i <= alpha. Requires 0 <= alpha < 1 and positive c.
SegmentDecomposition decompose(const ProbVector& c, const Rational& alpha);

// Requires 1 <= d <= n-1.
FlatTarget flatten_target(const ProbVector& y, std::size_t d);

// K_d(y) nonempty iff y_1 > y_d and y_{d+1} > y_n. Requires 2 <= d <= n-2.
bool kd_nonempty(const ProbVector& y, std::size_t d);

// Returns y(d), post-verified to lie in K_d(y): each flattened half is
// strictly majorized by the corresponding half of y.
ProbVector kd_witness(const ProbVector& y, std::size_t d);

// --- decision procedures -----------------------------------------------------

// The two-sided uniformity test
//   l_u(c) > max{y_d/y_1, y_n/y_{d+1}}  and  g_u(c) < y_{d+1}/y_d.
// True implies S(y) is a proper subset of T(y,c).
bool sufficient_condition(const ProbVector& y, const ProbVector& c, std::size_t d);

// Full decision for S(y) != T(y,c): scans d in {2..n-2}, checking
// y(d) (x) c' strictly majorized by y (x) c' for every block c' of the
// decomposition of c by g_u(y). nullopt is a proven negative.
std::optional<UsefulnessCertificate> catalyst_useful(const ProbVector& y,
                                                     const ProbVector& c);

// Given that catalyst_useful(y, c) certifies at some d, extracts a segment of
// c satisfying the two-sided uniformity test at that d and re-verifies it.
Segment necessary_segment(const ProbVector& y, const ProbVector& c);

// k-ELOCC / k-MLOCC usefulness: exists d in {2..n-2} with
//   y_d^k < y_1^{k-1} y_{d+1}  and  y_{d+1}^k > y_n^{k-1} y_d.
// The certificate carries kd_witness(y,d) and a constructed catalyst.
std::optional<UsefulnessCertificate> k_useful(const ProbVector& y, unsigned long k);

// Least k >= 2 with k_useful(y,k), or nullopt when no k ever works
// (y_d = y_1 or y_{d+1} = y_n for every d in {2..n-2}).
std::optional<unsigned long> min_useful_k(const ProbVector& y);

// Geometric catalyst (1, a, ..., a^{k-1}), normalized, with a found by
// bisection so that a^{k-1} lies strictly inside
//   ( max{(y_d/y_1)^{k-1}, (y_n/y_{d+1})^{k-1}}, y_{d+1}/y_d ).
// Post-verified via sufficient_condition.
ProbVector construct_catalyst(const ProbVector& y, std::size_t d, unsigned long k);

// Direct tensor-power membership test: kd_witness(y,d)^(x)k strictly majorized
// by y^(x)k, cross-checked against the closed-form power condition.
bool mlocc_witness_check(const ProbVector& y, std::size_t d, unsigned long k,
                         std::size_t size_cap = kDefaultSizeCap);

// Constructs a normalized n-dimensional target that z provably catalyzes
// (membership re-verified). Requires nonuniform positive z, n >= 4.
ProbVector targets_for_catalyst(const ProbVector& z, std::size_t n, std::size_t d);

// Heuristic search over the mesh-1/resolution simplex grid of positive
// k-dimensional catalysts; any hit is exact-verified. nullopt is inconclusive.
std::optional<ProbVector> grid_catalyst_search(const ProbVector& x, const ProbVector& y,
                                               std::size_t k, unsigned long resolution);

}  // namespace elocc
