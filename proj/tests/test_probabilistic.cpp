#include <random>

#include "doctest.h"

#include "elocc/errors.hpp"
#include "elocc/oracle.hpp"
#include "elocc/probabilistic.hpp"
#include "elocc/vector_io.hpp"

using namespace elocc;

namespace {

ProbVector pv(const char* text) { return parse_vector_text(text); }

ProbThreshold thr(long num, long den) { return ProbThreshold(make_rational(num, den)); }

const char* kExample2 = "0.5 0.3 0.2";

}  // namespace

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(ProbThreshold(Rational(1)), Error);
  CHECK_THROWS_AS(ProbThreshold(Rational(0)), Error);
  CHECK_THROWS_AS(ProbThreshold(make_rational(5, 4)), Error);
  CHECK(thr(1, 2).lambda == make_rational(1, 2));
}

TEST_CASE("in_S_lambda") {
  ProbVector x = pv("0.4 0.4 0.1 0.1");
  ProbVector y = pv("0.5 0.25 0.25 0");
  CHECK(in_S_lambda(x, y, thr(4, 5)));        // equals pmax
  CHECK_FALSE(in_S_lambda(x, y, thr(9, 10)));  // E_2 fails
  CHECK(in_S_lambda(y, y, thr(1, 3)));
  CHECK(in_S_lambda(y, y, thr(99, 100)));
}

TEST_CASE("in_T_lambda") {
  ProbVector y = pv(kExample2);
  ProbVector c = normalized(pv("1 3/4 9/16"));
  CHECK(in_T_lambda(y, y, c, thr(9, 10)));  // x = y holds at any threshold
  // a witness at d = 1 separates the catalyzed set from the plain one
  ProbThreshold t = thr(9, 10);
  SeparationDemo demo = elocc_separation_demo(y, c, 1, t);
  CHECK_FALSE(in_S_lambda(demo.x, y, t));
  CHECK(in_T_lambda(demo.x, y, c, t));
  // trivial one-dimensional catalyst changes nothing
  ProbVector unit = pv("1");
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    ProbVector a = random_target(rng, 3, 9, false);
    CHECK(in_T_lambda(a, y, unit, thr(1, 2)) == in_S_lambda(a, y, thr(1, 2)));
  }
}

TEST_CASE("in_M_lambda_k") {
  ProbVector y = pv(kExample2);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    ProbVector a = random_target(rng, 3, 9, false);
    CHECK(in_M_lambda_k(a, y, 1, thr(1, 2)) == in_S_lambda(a, y, thr(1, 2)));
  }
  CHECK(in_M_lambda_k(y, y, 3, thr(3, 4)));
  // Example 2 at k = 3: a perturbed boundary witness joins M^lambda_3 while
  // leaving S^lambda
  ProbThreshold t = thr(1, 2);
  SeparationDemo demo = mlocc_separation_demo(y, 3, 1, t);
  CHECK(in_M_lambda_k(demo.x, y, 3, t));
  CHECK_FALSE(in_S_lambda(demo.x, y, t));
}

TEST_CASE("prob_catalyst_useful") {
  ProbVector y = pv(kExample2);
  CHECK_FALSE(prob_catalyst_useful(y, pv("0.6 0.4")).has_value());  // l_u = 2/3 not > 2/3
  auto cert = prob_catalyst_useful(y, normalized(pv("1 3/4 9/16")));
  REQUIRE(cert.has_value());
  CHECK(cert->d == 1);
  REQUIRE(cert->segment.has_value());
  CHECK(cert->segment->start == 1);  // the whole catalyst already qualifies
  CHECK(cert->segment->end == 3);
  for (const Inequality& entry : cert->transcript) CHECK(entry.holds());

  // y_2 = y_n shuts the probabilistic regime down entirely
  CHECK_FALSE(prob_catalyst_useful(pv("0.6 0.2 0.2"), normalized(pv("1 3/4 9/16"))).has_value());
}

TEST_CASE("prob_catalyst_useful finds suffixes, not only whole catalysts") {
  ProbVector y = pv(kExample2);
  // prepend a huge component: the whole c fails its local uniformity bound,
  // but the suffix (1, 3/4, 9/16) still qualifies
  ProbVector c = normalized(pv("100 1 3/4 9/16"));
  auto cert = prob_catalyst_useful(y, c);
  REQUIRE(cert.has_value());
  CHECK(cert->d == 1);
  REQUIRE(cert->segment.has_value());
  CHECK(cert->segment->start == 2);
  CHECK(cert->segment->end == 4);
}

TEST_CASE("prob_k_useful") {
  ProbVector y = pv(kExample2);
  CHECK_FALSE(prob_k_useful(y, 2).has_value());  // 0.09 < 0.1 at d = 1
  auto cert = prob_k_useful(y, 3);               // 0.027 > 0.02
  REQUIRE(cert.has_value());
  CHECK(cert->d == 1);
  REQUIRE(cert->catalyst.has_value());
  CHECK(prob_catalyst_useful(y, *cert->catalyst).has_value());
  CHECK_FALSE(prob_k_useful(pv("1/4 1/4 1/4 1/4"), 5).has_value());
  CHECK_FALSE(prob_k_useful(y, 1).has_value());
}

TEST_CASE("prob_inf_useful") {
  CHECK(prob_inf_useful(pv(kExample2)));          // y_2 > y_3
  CHECK_FALSE(prob_inf_useful(pv("0.6 0.2 0.2")));  // y_2 = y_n
  CHECK_FALSE(prob_inf_useful(pv("1/3 1/3 1/3")));
  CHECK(prob_inf_useful(pv("0.5 0.25 0.25 0")));
}

TEST_CASE("prob_min_useful_k") {
  CHECK(prob_min_useful_k(pv(kExample2)) == 3);
  CHECK_FALSE(prob_min_useful_k(pv("0.6 0.2 0.2")).has_value());
  CHECK(prob_min_useful_k(pv("0.5 0.25 0.25 0")) == 2);  // zero tail helps at k = 2
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 6));
    ProbVector y = random_target(rng, n, 8, trial % 3 == 0);
    auto reported = prob_min_useful_k(y);
    std::optional<unsigned long> scanned;
    for (unsigned long k = 1; k <= 40 && !scanned; ++k)
      if (prob_k_useful(y, k)) scanned = k;
    if (reported && *reported <= 40) CHECK(scanned == reported);
    if (!reported) CHECK_FALSE(scanned.has_value());
    CHECK(reported.has_value() == prob_inf_useful(y));
  }
}

TEST_CASE("kd_lambda_witness construction") {
  ProbVector y = pv(kExample2);
  LambdaWitness w = kd_lambda_witness(y, 1, thr(1, 2));
  CHECK(w.vector == pv("0.75 0.125 0.125"));
  CHECK(w.equality_index == 2);
  CHECK(in_S_lambda(w.vector, y, thr(1, 2)));

  try {
    kd_lambda_witness(pv("0.6 0.2 0.2"), 1, thr(1, 2));
    FAIL("expected InfeasibleWitness");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infeasible_witness);
  }
}

TEST_CASE("kd_lambda_witness membership predicate, fuzzed") {
  std::mt19937_64 rng(54);
  const Rational lambdas[] = {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)};
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 6));
    ProbVector y = random_target(rng, n, 10, trial % 4 == 0);
    std::vector<std::size_t> valid;
    for (std::size_t d = 1; d + 2 <= n; ++d)
      if (y[d] > y[n - 1]) valid.push_back(d);
    if (valid.empty()) continue;
    std::size_t d = valid[static_cast<std::size_t>(
        rand_range(rng, 0, static_cast<long>(valid.size() - 1)))];
    ProbThreshold t(lambdas[rand_range(rng, 0, 2)]);
    LambdaWitness w = kd_lambda_witness(y, d, t);
    CHECK(w.equality_index == n - d);
    for (std::size_t l = 1; l <= n; ++l) {
      if (l == n - d)
        CHECK(w.vector.E_sum(l) == t.lambda * y.E_sum(l));
      else
        CHECK(w.vector.E_sum(l) > t.lambda * y.E_sum(l));
    }
  }
}

TEST_CASE("lambda independence of the catalyst decision") {
  std::mt19937_64 rng(55);
  const Rational lambdas[] = {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)};
  int useful_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 5));
    ProbVector y = random_target(rng, n, 10, trial % 5 == 0);
    ProbVector c = random_positive_vector(rng, static_cast<std::size_t>(rand_range(rng, 2, 4)), 10);
    auto cert = prob_catalyst_useful(y, c);
    if (!cert) continue;
    ++useful_seen;
    for (const Rational& lam : lambdas) {
      ProbThreshold t(lam);
      SeparationDemo demo = elocc_separation_demo(y, c, cert->d, t);
      CHECK_FALSE(in_S_lambda(demo.x, y, t));
      CHECK(in_T_lambda(demo.x, y, c, t));
    }
  }
  CHECK(useful_seen > 5);  // the sampler must actually exercise the useful branch
}

TEST_CASE("theorem-4 equivalence at desk scale") {
  std::mt19937_64 rng(56);
  const Rational lambdas[] = {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)};
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 5));
    ProbVector y = random_target(rng, n, 10, trial % 5 == 0);
    unsigned long k = static_cast<unsigned long>(rand_range(rng, 1, 4));
    auto cert = prob_k_useful(y, k);
    std::vector<std::size_t> valid;
    for (std::size_t d = 1; d + 2 <= n; ++d)
      if (y[d] > y[n - 1]) valid.push_back(d);
    if (valid.empty()) {
      CHECK_FALSE(cert.has_value());
      continue;
    }
    std::size_t d = cert ? cert->d : valid.front();
    ProbThreshold t(lambdas[rand_range(rng, 0, 2)]);
    auto [closed, direct] = check_prob_boundary_lemma(y, d, k, t);
    CHECK(closed == direct);
    CHECK(closed == cert.has_value());
    if (cert) {
      SeparationDemo demo = mlocc_separation_demo(y, k, cert->d, t);
      CHECK(in_M_lambda_k(demo.x, y, k, t));
      CHECK_FALSE(in_S_lambda(demo.x, y, t));
    }
  }
}

TEST_CASE("probabilistic usefulness is monotone in k") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 6));
    ProbVector y = random_target(rng, n, 10, trial % 3 == 0);
    bool prev = false;
    for (unsigned long k = 1; k <= 6; ++k) {
      bool now = prob_k_useful(y, k).has_value();
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("deterministic and probabilistic regimes diverge on Example 2") {
  ProbVector y = pv(kExample2);
  CHECK_FALSE(min_useful_k(y).has_value());  // never, deterministically
  CHECK(prob_inf_useful(y));                 // yet probabilistically useful
  auto cert = prob_k_useful(y, 3);
  REQUIRE(cert.has_value());
  const std::pair<long, long> samples[] = {{1, 4}, {1, 2}, {9, 10}};
  for (auto [num, den] : samples) {
    ProbThreshold t(make_rational(num, den));
    SeparationDemo demo = elocc_separation_demo(y, *cert->catalyst, cert->d, t);
    CHECK_FALSE(in_S_lambda(demo.x, y, t));
    CHECK(in_T_lambda(demo.x, y, *cert->catalyst, t));
  }
}

TEST_CASE("statement form and proof form of the suffix scan agree") {
  // theorem statement: some suffix qualifies; proof: the last block of the
  // decomposition by g_u(tail) qualifies
  std::mt19937_64 rng(58);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 3, 5));
    ProbVector y = random_target(rng, n, 10, trial % 5 == 0);
    ProbVector c = random_positive_vector(rng, static_cast<std::size_t>(rand_range(rng, 2, 4)), 10);
    bool statement = prob_catalyst_useful(y, c).has_value();
    bool proof_form = false;
    for (std::size_t d = 1; d + 2 <= n && !proof_form; ++d) {
      if (y[d] == 0 || y[d] <= y[n - 1]) continue;
      Rational gu_tail = y[n - 1] / y[d];
      Segment last = decompose(c, gu_tail).blocks.back();
      if (last.dim() < 2) continue;
      ProbVector seg = last.to_vector();
      proof_form = local_uniformity(seg) > gu_tail &&
                   global_uniformity(seg) < y[d] / y[d - 1];
    }
    CHECK(statement == proof_form);
  }
}
