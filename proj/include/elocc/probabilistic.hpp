#pragma once

#include <optional>

#include "elocc/catalysis.hpp"

namespace elocc {

/// Conversion-probability threshold, strictly inside (0,1). The deterministic
/// boundary lambda = 1 is rejected; that regime belongs to catalyst_useful /
/// k_useful, whose criteria differ.
struct ProbThreshold {
  Rational lambda;
  explicit ProbThreshold(Rational value);
};

/// A member of K_d^lambda(y): inside S^lambda(y) with E_l equality against
/// lambda*y exactly at l = n-d and strict inequality everywhere else.
struct LambdaWitness {
  std::size_t d = 0;
  ProbVector vector;
  std::size_t equality_index = 0;  // n - d
};

// x convertible to y with probability >= lambda: x %<^w lambda*y.
bool in_S_lambda(const ProbVector& x, const ProbVector& y, const ProbThreshold& t);

// Same with catalyst c attached on both sides.
bool in_T_lambda(const ProbVector& x, const ProbVector& y, const ProbVector& c,
                 const ProbThreshold& t);

// k-copy form: x^(x)k %<^w lambda^k y^(x)k.
bool in_M_lambda_k(const ProbVector& x, const ProbVector& y, unsigned long k,
                   const ProbThreshold& t, std::size_t size_cap = kDefaultSizeCap);

// Whether S^lambda(y) != T^lambda(y,c) for every threshold lambda in (0,1);
// the decision is lambda-free. Scans d in {1..n-2} and all suffix segments
// c' = (c_i..c_k), i < k, for l_u(c') > y_n/y_{d+1} and g_u(c') < y_{d+1}/y_d.
std::optional<UsefulnessCertificate> prob_catalyst_useful(const ProbVector& y,
                                                          const ProbVector& c);

// Probabilistic k-usefulness: exists d in {1..n-2} with y_{d+1}^k > y_n^{k-1} y_d.
std::optional<UsefulnessCertificate> prob_k_useful(const ProbVector& y, unsigned long k);

// Least k >= 2 with prob_k_useful(y,k), or nullopt when never (y_2 = y_n).
std::optional<unsigned long> prob_min_useful_k(const ProbVector& y);

// Usefulness for some finite k (equivalently unbounded catalysts): y_2 > y_n.
bool prob_inf_useful(const ProbVector& y);

// Constructive member of K_d^lambda(y): uniform tail carrying lambda*E_{n-d}(y),
// head lambda*y' lifted uniformly so the total is 1. Requires y normalized,
// 1 <= d <= n-2 and a non-uniform tail (y_{d+1} > y_n), else InfeasibleWitness.
LambdaWitness kd_lambda_witness(const ProbVector& y, std::size_t d, const ProbThreshold& t);

/// Perturbed witness separating the catalyzed set from S^lambda(y):
/// in_S_lambda(x, y, t) is false while the catalyzed/multi-copy membership
/// holds. epsilon is the perturbation that was verified.
struct SeparationDemo {
  ProbVector x;
  Rational epsilon;
};

SeparationDemo elocc_separation_demo(const ProbVector& y, const ProbVector& c,
                                     std::size_t d, const ProbThreshold& t);
SeparationDemo mlocc_separation_demo(const ProbVector& y, unsigned long k, std::size_t d,
                                     const ProbThreshold& t,
                                     std::size_t size_cap = kDefaultSizeCap);

}  // namespace elocc
