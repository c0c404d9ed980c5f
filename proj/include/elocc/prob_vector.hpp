#pragma once

#include <cstddef>
#include <vector>

#include "elocc/rational.hpp"

namespace elocc {

// Guardrail for tensor powers; callers may pass their own cap.
inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// A Schmidt-coefficient vector in canonical form: components sorted
/// non-increasing, all non-negative, with an exact running prefix-sum table.
/// The total need not be 1; unnormalized vectors are first-class.
/// Instances are immutable after construction and safe to share across threads.
class ProbVector {
 public:
  ProbVector() = default;  // dimension 0; identity for direct_sum

  // Sorts, validates (non-negative, at least one positive) and freezes.
  static ProbVector canonicalize(std::vector<Rational> raw);

  // Trusted constructor for values already sorted non-increasing.
  static ProbVector from_sorted(std::vector<Rational> sorted);

  std::size_t dim() const { return comps_.size(); }
  bool empty() const { return comps_.empty(); }
  const std::vector<Rational>& components() const { return comps_; }
  const Rational& operator[](std::size_t i) const { return comps_[i]; }  // 0-based

  const Rational& total() const { return prefix_.back(); }

  // Sum of the l largest components; prefix-sum lookup, O(1).
  const Rational& e_sum(std::size_t l) const;
  // Sum of the l smallest components (the customary E_l).
  Rational E_sum(std::size_t l) const;

  bool is_uniform() const;
  bool strictly_positive() const;

  // Zero-padded copy of dimension n >= dim().
  ProbVector padded(std::size_t n) const;

  friend bool operator==(const ProbVector& a, const ProbVector& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const ProbVector& a, const ProbVector& b) { return !(a == b); }

 private:
  std::vector<Rational> comps_;
  std::vector<Rational> prefix_;  // prefix_[l] = sum of l largest; size dim+1
  void build_prefix();
};

/// Contiguous run of a parent vector, 1-based inclusive indices.
struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<Rational> values;

  std::size_t dim() const { return values.size(); }
  ProbVector to_vector() const { return ProbVector::from_sorted(values); }
};

ProbVector direct_sum(const ProbVector& x, const ProbVector& y);
ProbVector tensor(const ProbVector& x, const ProbVector& y);
ProbVector tensor_power(const ProbVector& x, unsigned long k,
                        std::size_t size_cap = kDefaultSizeCap);
ProbVector scale(const ProbVector& x, const Rational& factor);
ProbVector normalized(const ProbVector& x);

// min x_{i+1}/x_i over adjacent pairs; requires dim >= 2 and positive entries.
Rational local_uniformity(const ProbVector& x);
// x_n / x_1.
Rational global_uniformity(const ProbVector& x);

// All contiguous segments of length >= 2, ordered by (start, end).
std::vector<Segment> segments_of(const ProbVector& x);

std::string to_string(const ProbVector& x);

}  // namespace elocc
