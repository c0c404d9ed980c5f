#include "elocc/probabilistic.hpp"

#include <stdexcept>

#include "elocc/errors.hpp"

namespace elocc {

ProbThreshold::ProbThreshold(Rational value) : lambda(std::move(value)) {
  if (lambda <= 0 || lambda >= 1)
    fail(Errc::precondition_violated,
         "threshold must satisfy 0 < lambda < 1 (got " + to_fraction(lambda) +
             "); the deterministic case lambda = 1 is handled by the "
             "deterministic procedures");
}

bool in_S_lambda(const ProbVector& x, const ProbVector& y, const ProbThreshold& t) {
  return super_majorized(x, scale(y, t.lambda));
}

bool in_T_lambda(const ProbVector& x, const ProbVector& y, const ProbVector& c,
                 const ProbThreshold& t) {
  return super_majorized(tensor(x, c), scale(tensor(y, c), t.lambda));
}

bool in_M_lambda_k(const ProbVector& x, const ProbVector& y, unsigned long k,
                   const ProbThreshold& t, std::size_t size_cap) {
  return super_majorized(tensor_power(x, k, size_cap),
                         scale(tensor_power(y, k, size_cap), pow_rational(t.lambda, k)));
}

namespace {

// Probabilistic split test at (d, segment): both uniformity bounds, exact.
bool prob_segment_condition(const ProbVector& y, std::size_t d,
                            const ProbVector& segment) {
  std::size_t n = y.dim();
  if (y[d] == 0) return false;  // all-zero tail; g_u bound unsatisfiable
  return local_uniformity(segment) > y[n - 1] / y[d] &&
         global_uniformity(segment) < y[d] / y[d - 1];
}

}  // namespace

std::optional<UsefulnessCertificate> prob_catalyst_useful(const ProbVector& y,
                                                          const ProbVector& c) {
  if (c.empty() || !c.strictly_positive())
    fail(Errc::zero_component, "catalyst components must be positive");
  if (c.dim() < 2) fail(Errc::dimension_one, "catalyst must have dim >= 2");
  std::size_t n = y.dim();
  std::size_t k = c.dim();
  for (std::size_t d = 1; d + 2 <= n; ++d) {
    for (std::size_t i = 1; i < k; ++i) {
      Segment suffix;
      suffix.start = i;
      suffix.end = k;
      suffix.values.assign(c.components().begin() + i - 1, c.components().end());
      if (!prob_segment_condition(y, d, suffix.to_vector())) continue;
      UsefulnessCertificate cert;
      cert.d = d;
      cert.segment = suffix;
      cert.witness =
          kd_lambda_witness(normalized(y), d, ProbThreshold(make_rational(1, 2))).vector;
      ProbVector seg = cert.segment->to_vector();
      cert.transcript.push_back({"l_u(c') > y_n/y_{d+1}", local_uniformity(seg),
                                 y[n - 1] / y[d], '>'});
      cert.transcript.push_back({"g_u(c') < y_{d+1}/y_d", global_uniformity(seg),
                                 y[d] / y[d - 1], '<'});
      return cert;
    }
  }
  return std::nullopt;
}

namespace {

bool prob_power_condition(const ProbVector& y, std::size_t d, unsigned long k) {
  std::size_t n = y.dim();
  return pow_rational(y[d], k) > pow_rational(y[n - 1], k - 1) * y[d - 1];
}

ProbVector construct_prob_catalyst(const ProbVector& y, std::size_t d, unsigned long k) {
  std::size_t n = y.dim();
  if (k < 2 || !prob_power_condition(y, d, k))
    fail(Errc::interval_empty, "probabilistic power condition fails at d = " +
                                   std::to_string(d) + ", k = " + std::to_string(k));
  // (y_n/y_{d+1})^{k-1} < a^{k-1} < y_{d+1}/y_d, found by bisection on a
  Rational lo = pow_rational(y[n - 1] / y[d], k - 1);
  Rational hi = y[d] / y[d - 1];
  Rational left(0), right(1);
  for (int iter = 0; iter < 4096; ++iter) {
    Rational mid = (left + right) / 2;
    Rational power = pow_rational(mid, k - 1);
    if (power <= lo)
      left = mid;
    else if (power >= hi)
      right = mid;
    else {
      std::vector<Rational> comps;
      comps.reserve(k);
      Rational v(1);
      for (unsigned long j = 0; j < k; ++j) {
        comps.push_back(v);
        v *= mid;
      }
      ProbVector cat = normalized(ProbVector::from_sorted(std::move(comps)));
      if (!prob_segment_condition(y, d, cat))
        throw std::logic_error("construct_prob_catalyst: verification failed");
      return cat;
    }
  }
  throw std::logic_error("construct_prob_catalyst: bisection exhausted");
}

}  // namespace

std::optional<UsefulnessCertificate> prob_k_useful(const ProbVector& y, unsigned long k) {
  if (k < 1) fail(Errc::precondition_violated, "prob_k_useful requires k >= 1");
  std::size_t n = y.dim();
  if (n < 3 || k < 2) return std::nullopt;
  for (std::size_t d = 1; d + 2 <= n; ++d) {
    if (!prob_power_condition(y, d, k)) continue;
    UsefulnessCertificate cert;
    cert.d = d;
    cert.witness =
        kd_lambda_witness(normalized(y), d, ProbThreshold(make_rational(1, 2))).vector;
    cert.catalyst = construct_prob_catalyst(y, d, k);
    cert.transcript.push_back({"y_{d+1}^k > y_n^{k-1} y_d", pow_rational(y[d], k),
                               pow_rational(y[n - 1], k - 1) * y[d - 1], '>'});
    return cert;
  }
  return std::nullopt;
}

std::optional<unsigned long> prob_min_useful_k(const ProbVector& y) {
  std::size_t n = y.dim();
  if (n < 3 || !prob_inf_useful(y)) return std::nullopt;
  std::optional<unsigned long> best;
  for (std::size_t d = 1; d + 2 <= n; ++d) {
    if (y[d] <= y[n - 1]) continue;  // condition unreachable at this split
    unsigned long hi = 2;
    while (!prob_power_condition(y, d, hi)) {
      hi *= 2;
      if (hi > (1ul << 40)) throw std::logic_error("prob_min_useful_k: bound blown");
    }
    unsigned long lo = 2;
    while (lo < hi) {
      unsigned long mid = lo + (hi - lo) / 2;
      if (prob_power_condition(y, d, mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    if (!best || lo < *best) best = lo;
  }
  return best;
}

bool prob_inf_useful(const ProbVector& y) {
  return y.dim() >= 3 && y[1] > y[y.dim() - 1];
}

LambdaWitness kd_lambda_witness(const ProbVector& y, std::size_t d, const ProbThreshold& t) {
  std::size_t n = y.dim();
  if (n < 3 || d < 1 || d > n - 2)
    fail(Errc::index_out_of_range,
         "kd_lambda_witness d = " + std::to_string(d) + ", n = " + std::to_string(n));
  if (y.total() != 1)
    fail(Errc::precondition_violated, "kd_lambda_witness requires a normalized target");
  if (y[d] <= y[n - 1])
    fail(Errc::infeasible_witness,
         "uniform tail: strictness below l = " + std::to_string(n - d) +
             " is unachievable");
  std::size_t tail = n - d;
  Rational tail_sum = t.lambda * y.E_sum(tail);
  Rational tail_value = tail_sum / static_cast<long>(tail);
  Rational lift = (Rational(1) - t.lambda) / static_cast<long>(d);
  std::vector<Rational> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < d; ++i) comps.push_back(t.lambda * y[i] + lift);
  comps.insert(comps.end(), tail, tail_value);
  LambdaWitness witness{d, ProbVector::from_sorted(std::move(comps)), tail};

  // exact post-check of the K_d^lambda membership predicate
  for (std::size_t l = 1; l <= n; ++l) {
    Rational lhs = witness.vector.E_sum(l);
    Rational rhs = t.lambda * y.E_sum(l);
    bool ok = l == tail ? lhs == rhs : lhs > rhs;
    if (!ok) throw std::logic_error("kd_lambda_witness: membership predicate failed");
  }
  return witness;
}

namespace {

ProbVector perturb_extremes(const ProbVector& x, const Rational& eps) {
  std::vector<Rational> comps = x.components();
  comps.front() += eps;
  comps.back() -= eps;
  return ProbVector::canonicalize(std::move(comps));
}

template <typename MembershipTest>
SeparationDemo separation_demo(const ProbVector& y, std::size_t d, const ProbThreshold& t,
                               MembershipTest still_inside) {
  ProbVector x = kd_lambda_witness(y, d, t).vector;
  // pushing weight from the smallest to the largest component leaves
  // S^lambda(y) immediately (the E_{n-d} equality becomes a violation), while
  // the strict catalyzed membership survives small enough perturbations
  Rational eps = x[x.dim() - 1] / 2;
  for (int iter = 0; iter < 256; ++iter) {
    ProbVector candidate = perturb_extremes(x, eps);
    if (!in_S_lambda(candidate, y, t) && still_inside(candidate))
      return SeparationDemo{candidate, eps};
    eps /= 2;
  }
  throw std::logic_error("separation_demo: no feasible perturbation found");
}

}  // namespace

SeparationDemo elocc_separation_demo(const ProbVector& y, const ProbVector& c,
                                     std::size_t d, const ProbThreshold& t) {
  return separation_demo(y, d, t, [&](const ProbVector& candidate) {
    return in_T_lambda(candidate, y, c, t);
  });
}

SeparationDemo mlocc_separation_demo(const ProbVector& y, unsigned long k, std::size_t d,
                                     const ProbThreshold& t, std::size_t size_cap) {
  return separation_demo(y, d, t, [&](const ProbVector& candidate) {
    return in_M_lambda_k(candidate, y, k, t, size_cap);
  });
}

}  // namespace elocc
