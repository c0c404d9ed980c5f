#include <random>

#include "doctest.h"

#include "elocc/catalysis.hpp"
#include "elocc/errors.hpp"
#include "elocc/oracle.hpp"
#include "elocc/vector_io.hpp"

using namespace elocc;

namespace {

ProbVector pv(const char* text) { return parse_vector_text(text); }

const char* kJpTarget = "0.5 0.25 0.25 0";

// two-sided uniformity test, written out independently of the library
bool naive_eq7(const ProbVector& y, const ProbVector& c, std::size_t d) {
  std::size_t n = y.dim();
  if (y[d] == 0) return false;
  Rational lu = c[1] / c[0];
  for (std::size_t i = 1; i + 1 < c.dim(); ++i) {
    Rational ratio = c[i + 1] / c[i];
    lu = std::min(lu, ratio);
  }
  Rational gu = c[c.dim() - 1] / c[0];
  Rational head = y[d - 1] / y[0];
  Rational tail = y[n - 1] / y[d];
  Rational bound = std::max(head, tail);
  return lu > bound && gu < y[d] / y[d - 1];
}

// random (y, d) with K_d(y) nonempty
std::pair<ProbVector, std::size_t> random_split(std::mt19937_64& rng, std::size_t n,
                                                bool allow_zero) {
  for (;;) {
    ProbVector y = random_target(rng, n, 12, allow_zero);
    std::vector<std::size_t> valid;
    for (std::size_t d = 2; d + 2 <= n; ++d)
      if (kd_nonempty(y, d)) valid.push_back(d);
    if (valid.empty()) continue;
    return {y, valid[static_cast<std::size_t>(
                rand_range(rng, 0, static_cast<long>(valid.size() - 1)))]};
  }
}

}  // namespace

TEST_CASE("decompose blocks") {
  SegmentDecomposition dec = decompose(pv("0.5 0.3 0.12 0.08"), make_rational(1, 2));
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].values == pv("0.5 0.3").components());
  CHECK(dec.blocks[0].start == 1);
  CHECK(dec.blocks[0].end == 2);
  CHECK(dec.blocks[1].values == pv("0.12 0.08").components());
  CHECK(dec.blocks[1].start == 3);
  CHECK(dec.blocks[1].end == 4);

  CHECK(decompose(pv("0.5 0.3 0.12 0.08"), Rational(0)).blocks.size() == 1);
  CHECK(decompose(pv("1/4 1/4 1/4 1/4"), make_rational(1, 2)).blocks.size() == 1);

  CHECK_THROWS_AS(decompose(pv("0.5 0.3 0.2"), Rational(1)), Error);
  CHECK_THROWS_AS(decompose(pv("0.5 0.5 0"), make_rational(1, 2)), Error);
}

TEST_CASE("decomposition satisfies its three clauses and is unique") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t k = static_cast<std::size_t>(rand_range(rng, 2, 7));
    ProbVector c = random_positive_vector(rng, k, 12);
    Rational alpha = make_rational(rand_range(rng, 0, 7), 8);
    SegmentDecomposition dec = decompose(c, alpha);
    // clause 1: concatenation equals c
    std::vector<Rational> cat;
    for (const Segment& b : dec.blocks)
      cat.insert(cat.end(), b.values.begin(), b.values.end());
    CHECK(cat == c.components());
    // clause 2: internal ratios above alpha
    for (const Segment& b : dec.blocks)
      if (b.dim() >= 2) CHECK(local_uniformity(b.to_vector()) > alpha);
    // clause 3: cross-block gap at or below alpha
    for (std::size_t i = 0; i + 1 < dec.blocks.size(); ++i)
      CHECK(dec.blocks[i + 1].values.front() / dec.blocks[i].values.back() <= alpha);
  }
}

TEST_CASE("flatten_target") {
  CHECK(flatten_target(pv(kJpTarget), 2).vector == pv("0.375 0.375 0.125 0.125"));
  CHECK(flatten_target(pv("1/4 1/4 1/4 1/4"), 2).vector == pv("1/4 1/4 1/4 1/4"));
  CHECK(flatten_target(pv("0.6 0.2 0.2 0"), 2).vector == pv("0.4 0.4 0.1 0.1"));
  CHECK_THROWS_AS(flatten_target(pv(kJpTarget), 4), Error);
  CHECK_THROWS_AS(flatten_target(pv(kJpTarget), 0), Error);
}

TEST_CASE("kd_nonempty and kd_witness") {
  CHECK(kd_nonempty(pv(kJpTarget), 2));
  CHECK_FALSE(kd_nonempty(pv("1/4 1/4 1/4 1/4"), 2));
  CHECK_FALSE(kd_nonempty(pv("0.4 0.4 0.1 0.1"), 2));  // y_1 = y_2

  CHECK(kd_witness(pv(kJpTarget), 2) == pv("0.375 0.375 0.125 0.125"));
  CHECK(kd_witness(pv("0.5 0.3 0.15 0.05"), 2) == pv("0.4 0.4 0.1 0.1"));
  try {
    kd_witness(pv("0.4 0.4 0.1 0.1"), 2);
    FAIL("expected EmptyKd");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_kd);
  }
}

TEST_CASE("sufficient_condition") {
  CHECK(sufficient_condition(pv(kJpTarget), pv("0.6 0.4"), 2));
  CHECK_FALSE(sufficient_condition(pv(kJpTarget), pv("0.5 0.5"), 2));  // uniform c
  CHECK(sufficient_condition(pv("0.6 0.2 0.2 0"), pv("0.6 0.4"), 2));
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto [y, d] = random_split(rng, static_cast<std::size_t>(rand_range(rng, 4, 6)),
                               trial % 3 == 0);
    ProbVector c = random_positive_vector(rng, static_cast<std::size_t>(rand_range(rng, 2, 4)), 12);
    CHECK(sufficient_condition(y, c, d) == naive_eq7(y, c, d));
  }
}

TEST_CASE("catalyst_useful on the JP fixture") {
  auto cert = catalyst_useful(pv(kJpTarget), pv("0.6 0.4"));
  REQUIRE(cert.has_value());
  CHECK(cert->d == 2);
  CHECK(cert->witness == pv("0.375 0.375 0.125 0.125"));
  CHECK(cert->transcript.size() == 7);  // single block, 7 strict prefixes
  for (const Inequality& entry : cert->transcript) CHECK(entry.holds());

  CHECK_FALSE(catalyst_useful(pv(kJpTarget), pv("0.5 0.5")).has_value());
  CHECK_FALSE(catalyst_useful(pv("1/4 1/4 1/4 1/4"), pv("0.6 0.4")).has_value());
  CHECK_FALSE(catalyst_useful(pv("0.5 0.3 0.2"), pv("0.6 0.4")).has_value());  // n = 3
}

TEST_CASE("certificate transcript re-verifies against a recomputation") {
  auto cert = catalyst_useful(pv(kJpTarget), pv("0.6 0.4"));
  REQUIRE(cert.has_value());
  ProbVector lhs = tensor(flatten_target(pv(kJpTarget), cert->d).vector, pv("0.6 0.4"));
  ProbVector rhs = tensor(pv(kJpTarget), pv("0.6 0.4"));
  REQUIRE(cert->transcript.size() == lhs.dim() - 1);
  for (std::size_t m = 1; m < lhs.dim(); ++m) {
    CHECK(cert->transcript[m - 1].lhs == lhs.e_sum(m));
    CHECK(cert->transcript[m - 1].rhs == rhs.e_sum(m));
  }
}

TEST_CASE("necessary_segment") {
  Segment whole = necessary_segment(pv(kJpTarget), pv("0.6 0.4"));
  CHECK(whole.start == 1);
  CHECK(whole.end == 2);
  CHECK(whole.values == pv("0.6 0.4").components());

  // inert low block: the decomposition isolates the working head
  ProbVector padded = pv("0.6 0.4 0.01 0.01");
  auto cert = catalyst_useful(pv(kJpTarget), padded);
  REQUIRE(cert.has_value());
  Segment seg = necessary_segment(pv(kJpTarget), padded);
  CHECK(seg.start == 1);
  CHECK(seg.end == 2);
  CHECK(seg.values[0] / seg.values[1] == make_rational(3, 2));  // 0.6 : 0.4
  CHECK(sufficient_condition(pv(kJpTarget), seg.to_vector(), cert->d));

  try {
    necessary_segment(pv(kJpTarget), pv("0.5 0.5"));
    FAIL("expected NoCertificate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_certificate);
  }
}

TEST_CASE("sufficient condition implies a certificate, segment round trip") {
  std::mt19937_64 rng(33);
  int produced = 0;
  while (produced < 120) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    auto [y, d] = random_split(rng, n, produced % 4 == 0);
    unsigned long k = static_cast<unsigned long>(rand_range(rng, 2, 5));
    ProbVector c;
    try {
      c = construct_catalyst(y, d, k);
    } catch (const Error&) {
      continue;  // power condition fails at this (d, k)
    }
    ++produced;
    REQUIRE(sufficient_condition(y, c, d));
    auto cert = catalyst_useful(y, c);
    REQUIRE(cert.has_value());
    Segment seg = necessary_segment(y, c);
    CHECK(sufficient_condition(y, seg.to_vector(), cert->d));
  }
}

TEST_CASE("two-level catalysts: the test is exact") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    ProbVector y = random_target(rng, n, 12, trial % 4 == 0);
    long a = rand_range(rng, 2, 12);
    long b = rand_range(rng, 1, a);
    std::size_t p = static_cast<std::size_t>(rand_range(rng, 1, 3));
    std::size_t q = static_cast<std::size_t>(rand_range(rng, 1, 3));
    std::vector<Rational> comps(p, Rational(a));
    comps.insert(comps.end(), q, Rational(b));
    ProbVector c = ProbVector::from_sorted(std::move(comps));
    bool eq7_somewhere = false;
    for (std::size_t d = 2; d + 2 <= n; ++d)
      if (sufficient_condition(y, c, d)) eq7_somewhere = true;
    CHECK(eq7_somewhere == catalyst_useful(y, c).has_value());
  }
}

TEST_CASE("block intersection: catalysis iff every block catalyzes") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 5));
    ProbVector y = random_target(rng, n, 10, trial % 3 == 0);
    if (y.is_uniform()) continue;
    ProbVector c = random_positive_vector(rng, static_cast<std::size_t>(rand_range(rng, 2, 5)), 12);
    ProbVector x = random_target(rng, n, 10, false);
    bool whole = majorizes(tensor(x, c), tensor(y, c));
    bool blocks = true;
    for (const Segment& b : decompose(c, global_uniformity(y)).blocks)
      blocks = blocks && majorizes(tensor(x, b.to_vector()), tensor(y, b.to_vector()));
    CHECK(whole == blocks);
  }
}

TEST_CASE("k_useful on the Example-1 family and JP target") {
  // y = (1, a, a^3, b)/C with a = 1/2, b = 1/64 < a^5
  ProbVector y1 = normalized(pv("1 1/2 1/8 1/64"));
  CHECK_FALSE(k_useful(y1, 3).has_value());  // equality y_2^3 = y_1^2 y_3
  auto cert = k_useful(y1, 4);
  REQUIRE(cert.has_value());
  CHECK(cert->d == 2);
  REQUIRE(cert->catalyst.has_value());
  CHECK(sufficient_condition(y1, *cert->catalyst, 2));

  auto jp = k_useful(pv(kJpTarget), 2);
  REQUIRE(jp.has_value());
  CHECK(jp->d == 2);
  CHECK_FALSE(k_useful(pv(kJpTarget), 1).has_value());
  CHECK_FALSE(k_useful(pv("0.5 0.3 0.2"), 4).has_value());  // n = 3
}

TEST_CASE("min_useful_k") {
  CHECK(min_useful_k(pv(kJpTarget)) == 2);
  CHECK(min_useful_k(normalized(pv("1 1/2 1/8 1/64"))) == 4);
  CHECK_FALSE(min_useful_k(pv("0.5 0.3 0.2")).has_value());        // n = 3: never
  CHECK_FALSE(min_useful_k(pv("1/4 1/4 1/4 1/4")).has_value());    // uniform
  CHECK_FALSE(min_useful_k(pv("0.4 0.4 0.1 0.1")).has_value());    // y_1 = y_2
  CHECK(min_useful_k(pv("0.6 0.2 0.2 0")) == 2);
}

TEST_CASE("min_useful_k agrees with a linear scan") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    ProbVector y = random_target(rng, n, 8, trial % 3 == 0);
    auto reported = min_useful_k(y);
    std::optional<unsigned long> scanned;
    for (unsigned long k = 1; k <= 40 && !scanned; ++k)
      if (k_useful(y, k)) scanned = k;
    if (reported && *reported <= 40) CHECK(scanned == reported);
    if (!reported) CHECK_FALSE(scanned.has_value());
  }
}

TEST_CASE("never-case matches the component condition") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    ProbVector y = random_target(rng, n, 6, trial % 2 == 0);
    bool condition_all_d = true;
    for (std::size_t d = 2; d + 2 <= n; ++d)
      if (y[0] > y[d - 1] && y[d] > y[n - 1]) condition_all_d = false;
    CHECK(condition_all_d == !min_useful_k(y).has_value());
  }
}

TEST_CASE("usefulness is monotone in k") {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    ProbVector y = random_target(rng, n, 10, trial % 3 == 0);
    bool prev = false;
    for (unsigned long k = 1; k <= 6; ++k) {
      bool now = k_useful(y, k).has_value();
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("construct_catalyst") {
  ProbVector c = construct_catalyst(pv(kJpTarget), 2, 2);
  CHECK(c.dim() == 2);
  CHECK(sufficient_condition(pv(kJpTarget), c, 2));
  // ratio inside (1/2, 1)
  Rational ratio = c[1] / c[0];
  CHECK(ratio > make_rational(1, 2));
  CHECK(ratio < 1);

  ProbVector c4 = construct_catalyst(normalized(pv("1 1/2 1/8 1/64")), 2, 4);
  CHECK(c4.dim() == 4);
  Rational a3 = pow_rational(local_uniformity(c4), 3);
  CHECK(a3 > make_rational(1, 8));
  CHECK(a3 < make_rational(1, 2));

  try {
    construct_catalyst(normalized(pv("1 1/2 1/8 1/64")), 2, 3);
    FAIL("expected IntervalEmpty");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::interval_empty);
  }
}

TEST_CASE("constructed catalyst sends the witness strictly inside") {
  std::mt19937_64 rng(39);
  int produced = 0;
  while (produced < 60) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 5));
    auto [y, d] = random_split(rng, n, false);
    unsigned long k = static_cast<unsigned long>(rand_range(rng, 2, 4));
    ProbVector c;
    try {
      c = construct_catalyst(y, d, k);
    } catch (const Error&) {
      continue;
    }
    ++produced;
    ProbVector witness = kd_witness(y, d);
    CHECK(strictly_majorized(tensor(witness, c), tensor(y, c)));
  }
}

TEST_CASE("mlocc_witness_check") {
  CHECK(mlocc_witness_check(pv(kJpTarget), 2, 2));
  CHECK_FALSE(mlocc_witness_check(normalized(pv("1 1/2 1/8 1/64")), 2, 3));
  // k = 1: members of K_d(y) sit on the boundary of S(y), both routes false
  CHECK_FALSE(mlocc_witness_check(pv(kJpTarget), 2, 1));
}

TEST_CASE("k_useful crosschecks the direct tensor-power route") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 5));
    auto [y, d] = random_split(rng, n, trial % 4 == 0);
    unsigned long k = static_cast<unsigned long>(rand_range(rng, 1, 4));
    auto [closed, direct] = check_tensor_power_lemma(y, d, k);
    CHECK(closed == direct);
    CHECK(mlocc_witness_check(y, d, k) == closed);  // also exercises the internal assert
  }
}

TEST_CASE("targets_for_catalyst") {
  ProbVector z = pv("0.6 0.4");
  ProbVector y = targets_for_catalyst(z, 4, 2);
  // unnormalized profile (1, 1/3, 5/18, 5/54), normalized
  ProbVector expected = normalized(pv("1 1/3 5/18 5/54"));
  CHECK(y == expected);
  CHECK(sufficient_condition(y, z, 2));
  CHECK(catalyst_useful(y, z).has_value());

  // the Daftuar-Klimesh target is itself a member of the constructed family
  CHECK(sufficient_condition(pv("0.6 0.2 0.2 0"), z, 2));

  CHECK_THROWS_AS(targets_for_catalyst(pv("0.5 0.5"), 4, 2), Error);
  try {
    targets_for_catalyst(pv("1/3 1/3 1/3"), 5, 2);
    FAIL("expected UniformCatalyst");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::uniform_catalyst);
  }
}

TEST_CASE("targets_for_catalyst across dimensions and catalysts") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t kz = static_cast<std::size_t>(rand_range(rng, 2, 4));
    ProbVector z = random_positive_vector(rng, kz, 12);
    if (z.is_uniform()) continue;
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 6));
    std::size_t d = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(n - 2)));
    ProbVector y = targets_for_catalyst(z, n, d);
    CHECK(y.total() == 1);
    CHECK(sufficient_condition(y, z, d));
    CHECK(catalyst_useful(y, z).has_value());
  }
}

TEST_CASE("grid_catalyst_search") {
  ProbVector x = pv("0.4 0.4 0.1 0.1");
  ProbVector y = pv(kJpTarget);
  auto hit = grid_catalyst_search(x, y, 2, 10);
  REQUIRE(hit.has_value());
  CHECK(*hit == pv("0.6 0.4"));
  CHECK(majorizes(tensor(x, *hit), tensor(y, *hit)));

  // x already convertible: the trivial uniform catalyst comes back
  auto trivial = grid_catalyst_search(pv("1/4 1/4 1/4 1/4"), y, 3, 9);
  REQUIRE(trivial.has_value());
  CHECK(trivial->is_uniform());

  // min_useful_k = 4 guarantees no 2-dimensional catalyst exists
  ProbVector y1 = normalized(pv("1 1/2 1/8 1/64"));
  ProbVector incomparable = pv("0.6 0.35 0.04 0.01");  // beats y1 at e_2 only
  CHECK_FALSE(majorizes(incomparable, y1));
  CHECK_FALSE(grid_catalyst_search(incomparable, y1, 2, 8).has_value());
}
