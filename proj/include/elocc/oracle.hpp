#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "elocc/probabilistic.hpp"

namespace elocc {

/// Trial budgets and size caps for the fuzzing suites. These are
/// configuration, not constants; the CLI exposes them as flags.
struct OracleConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_dim = 5;
  unsigned long max_k = 4;
  int max_component = 12;   // integer numerators are drawn from 0..max_component
  int lp_members = 200;     // extra members probed per LP trial
};

/// Outcome of one fuzzing suite. Counterexample transcripts carry every
/// sampled input in exact "p/q" form so a violation can be re-verified
/// independently. Identical seed and config reproduce identical transcripts.
struct OracleReport {
  std::string lemma_id;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> counterexamples;
  std::chrono::microseconds elapsed{0};

  bool passed() const { return counterexamples.empty(); }
};

// --- samplers (all post-verify their advertised membership) ------------------

// Deterministic helpers for reproducible fuzzing.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial);
long rand_range(std::mt19937_64& rng, long lo, long hi);  // inclusive

// Random normalized target of the given dimension; occasional zero tail
// entries when allow_zero is set. Never all-zero.
ProbVector random_target(std::mt19937_64& rng, std::size_t dim, int max_component,
                         bool allow_zero);
ProbVector random_positive_vector(std::mt19937_64& rng, std::size_t dim, int max_component);
ProbVector random_nonuniform_target(std::mt19937_64& rng, std::size_t dim,
                                    int max_component, bool allow_zero);

// x = (1-t) y + t uniform, optionally stirred by random transfer operations;
// strictly majorized by any non-uniform y, and verified so.
ProbVector sample_interior(const ProbVector& y, const Rational& t, std::uint64_t rng_seed);

// x <= y componentwise mixing: x majorized by y (possibly with ties).
ProbVector sample_majorized(const ProbVector& y, std::mt19937_64& rng);
// Strict interior sample with a random mixing weight and random stirring.
ProbVector sample_strict_interior(const ProbVector& y, std::mt19937_64& rng);
// y plus strictly positive noise: strictly super-majorizes y.
ProbVector sample_strict_super(const ProbVector& y, std::mt19937_64& rng);
// y plus non-negative noise: super-majorizes y.
ProbVector sample_weak_super(const ProbVector& y, std::mt19937_64& rng);

// --- single-shot lemma checks -------------------------------------------------

struct OverlapFamilyMember {
  ProbVector y;
  unsigned long copies = 1;
  ProbVector x;  // strictly majorized by y
};

// (chain condition on the y-family, direct strict check on the direct sums).
// The two booleans must agree; fuzzing asserts that.
std::pair<bool, bool> check_overlap_sequence(const std::vector<OverlapFamilyMember>& family);

// (closed-form power condition, direct tensor-power strict test with the
// kd_witness member).
std::pair<bool, bool> check_tensor_power_lemma(const ProbVector& y, std::size_t d,
                                               unsigned long k,
                                               std::size_t size_cap = kDefaultSizeCap);

// Probabilistic analogue with the kd_lambda_witness member.
std::pair<bool, bool> check_prob_boundary_lemma(const ProbVector& y, std::size_t d,
                                                unsigned long k, const ProbThreshold& t,
                                                std::size_t size_cap = kDefaultSizeCap);

// Given x (x) c strictly majorized by y (x) c, bisects the perturbation
// (x_1+e, ..., x_n-e) down from eps until the catalyzed majorization still
// holds; returns whether a feasible e was found.
bool check_perturbation_interior(const ProbVector& y, const ProbVector& c,
                                 const ProbVector& x, const Rational& eps);

// --- fuzzing suites -----------------------------------------------------------

OracleReport check_direct_sum_lemma(const OracleConfig& cfg);
OracleReport check_overlap_suite(const OracleConfig& cfg);
OracleReport check_lginterior(const OracleConfig& cfg);
OracleReport check_tensor_power_suite(const OracleConfig& cfg);
OracleReport check_strictsuper_lemma(const OracleConfig& cfg);
OracleReport check_LP(const OracleConfig& cfg);
OracleReport check_prob_boundary_suite(const OracleConfig& cfg);
OracleReport check_perturbation_suite(const OracleConfig& cfg);

const std::vector<std::string>& oracle_suite_names();
OracleReport run_oracle_suite(const std::string& name, const OracleConfig& cfg);
std::vector<OracleReport> run_all_suites(const OracleConfig& cfg);

}  // namespace elocc
