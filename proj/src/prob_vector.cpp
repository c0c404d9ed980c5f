#include "elocc/prob_vector.hpp"

#include <algorithm>
#include <sstream>

#include "elocc/errors.hpp"

namespace elocc {

void ProbVector::build_prefix() {
  prefix_.clear();
  prefix_.reserve(comps_.size() + 1);
  prefix_.emplace_back(0);
  for (const Rational& v : comps_) prefix_.push_back(prefix_.back() + v);
}

ProbVector ProbVector::canonicalize(std::vector<Rational> raw) {
  if (raw.empty()) fail(Errc::empty_vector, "cannot canonicalize an empty vector");
  bool any_positive = false;
  for (const Rational& v : raw) {
    if (v < 0) fail(Errc::negative_component, "component " + to_fraction(v));
    if (v > 0) any_positive = true;
  }
  if (!any_positive) fail(Errc::all_zero, "vector has no positive component");
  std::sort(raw.begin(), raw.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  ProbVector out;
  out.comps_ = std::move(raw);
  out.build_prefix();
  return out;
}

ProbVector ProbVector::from_sorted(std::vector<Rational> sorted) {
  ProbVector out;
  out.comps_ = std::move(sorted);
  out.build_prefix();
  return out;
}

const Rational& ProbVector::e_sum(std::size_t l) const {
  if (l >= prefix_.size())
    fail(Errc::index_out_of_range, "e_sum(" + std::to_string(l) + ") on dimension " +
                                       std::to_string(dim()));
  return prefix_[l];
}

Rational ProbVector::E_sum(std::size_t l) const {
  if (l >= prefix_.size())
    fail(Errc::index_out_of_range, "E_sum(" + std::to_string(l) + ") on dimension " +
                                       std::to_string(dim()));
  return total() - prefix_[dim() - l];
}

bool ProbVector::is_uniform() const {
  return comps_.empty() || comps_.front() == comps_.back();
}

bool ProbVector::strictly_positive() const {
  return !comps_.empty() && comps_.back() > 0;
}

ProbVector ProbVector::padded(std::size_t n) const {
  if (n < dim()) fail(Errc::index_out_of_range, "cannot pad to a smaller dimension");
  if (n == dim()) return *this;
  std::vector<Rational> comps = comps_;
  comps.resize(n, Rational(0));
  return from_sorted(std::move(comps));
}

ProbVector direct_sum(const ProbVector& x, const ProbVector& y) {
  std::vector<Rational> merged(x.dim() + y.dim());
  std::merge(x.components().begin(), x.components().end(), y.components().begin(),
             y.components().end(), merged.begin(),
             [](const Rational& a, const Rational& b) { return a > b; });
  return ProbVector::from_sorted(std::move(merged));
}

ProbVector tensor(const ProbVector& x, const ProbVector& y) {
  if (x.empty() || y.empty()) fail(Errc::empty_vector, "tensor of an empty vector");
  if (y.dim() == 1) return scale(x, y[0]);
  if (x.dim() == 1) return scale(y, x[0]);
  std::vector<Rational> products;
  products.reserve(x.dim() * y.dim());
  for (const Rational& a : x.components())
    for (const Rational& b : y.components()) products.push_back(a * b);
  std::sort(products.begin(), products.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  return ProbVector::from_sorted(std::move(products));
}

ProbVector tensor_power(const ProbVector& x, unsigned long k, std::size_t size_cap) {
  if (k < 1) fail(Errc::precondition_violated, "tensor_power requires k >= 1");
  if (x.empty()) fail(Errc::empty_vector, "tensor_power of an empty vector");
  mpz_class result_dim;
  mpz_ui_pow_ui(result_dim.get_mpz_t(), x.dim(), k);
  if (result_dim > static_cast<unsigned long>(size_cap))
    fail(Errc::size_cap_exceeded, "dim " + std::to_string(x.dim()) + "^" +
                                      std::to_string(k) + " exceeds cap " +
                                      std::to_string(size_cap));
  // binary exponentiation; each tensor() re-sorts, so only O(log k) big sorts
  ProbVector base = x;
  ProbVector acc;
  bool have_acc = false;
  unsigned long rest = k;
  while (rest > 0) {
    if (rest & 1) {
      acc = have_acc ? tensor(acc, base) : base;
      have_acc = true;
    }
    rest >>= 1;
    if (rest > 0) base = tensor(base, base);
  }
  return acc;
}

ProbVector scale(const ProbVector& x, const Rational& factor) {
  if (factor <= 0) fail(Errc::precondition_violated, "scale factor must be positive");
  std::vector<Rational> comps;
  comps.reserve(x.dim());
  for (const Rational& v : x.components()) comps.push_back(v * factor);
  return ProbVector::from_sorted(std::move(comps));
}

ProbVector normalized(const ProbVector& x) {
  if (x.empty()) fail(Errc::empty_vector, "normalize of an empty vector");
  if (x.total() == 1) return x;
  return scale(x, Rational(1) / x.total());
}

Rational local_uniformity(const ProbVector& x) {
  if (x.dim() < 2) fail(Errc::dimension_one, "local_uniformity requires dim >= 2");
  if (!x.strictly_positive())
    fail(Errc::zero_component, "local_uniformity requires positive components");
  Rational best = x[1] / x[0];
  for (std::size_t i = 1; i + 1 < x.dim(); ++i) {
    Rational ratio = x[i + 1] / x[i];
    if (ratio < best) best = ratio;
  }
  return best;
}

Rational global_uniformity(const ProbVector& x) {
  if (x.empty()) fail(Errc::empty_vector, "global_uniformity of an empty vector");
  if (x[0] <= 0) fail(Errc::zero_component, "global_uniformity requires x_1 > 0");
  return x[x.dim() - 1] / x[0];
}

std::vector<Segment> segments_of(const ProbVector& x) {
  std::vector<Segment> out;
  if (x.dim() < 2) return out;
  out.reserve(x.dim() * (x.dim() - 1) / 2);
  for (std::size_t start = 1; start < x.dim(); ++start) {
    for (std::size_t end = start + 1; end <= x.dim(); ++end) {
      Segment seg;
      seg.start = start;
      seg.end = end;
      seg.values.assign(x.components().begin() + start - 1, x.components().begin() + end);
      out.push_back(std::move(seg));
    }
  }
  return out;
}

std::string to_string(const ProbVector& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) out << ", ";
    out << x[i];
  }
  out << ")";
  return out.str();
}

}  // namespace elocc
