#include "elocc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "elocc/errors.hpp"
#include "elocc/vector_io.hpp"

namespace elocc {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  // plain modulo keeps the stream implementation-independent
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ProbVector random_target(std::mt19937_64& rng, std::size_t dim, int max_component,
                         bool allow_zero) {
  std::vector<Rational> comps;
  comps.reserve(dim);
  bool any_positive = false;
  for (std::size_t i = 0; i < dim; ++i) {
    long v = rand_range(rng, allow_zero ? 0 : 1, max_component);
    if (v > 0) any_positive = true;
    comps.emplace_back(v);
  }
  if (!any_positive) comps[0] = 1;
  ProbVector raw = ProbVector::canonicalize(std::move(comps));
  return normalized(raw);
}

ProbVector random_positive_vector(std::mt19937_64& rng, std::size_t dim,
                                  int max_component) {
  return random_target(rng, dim, max_component, false);
}

ProbVector random_nonuniform_target(std::mt19937_64& rng, std::size_t dim,
                                    int max_component, bool allow_zero) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    ProbVector v = random_target(rng, dim, max_component, allow_zero);
    if (!v.is_uniform()) return v;
  }
  throw std::logic_error("random_nonuniform_target: sampling starved");
}

namespace {

// Robin Hood transfer between two positions: keeps the sum, moves the vector
// further down the majorization order.
void t_transform(std::vector<Rational>& comps, std::mt19937_64& rng) {
  std::size_t n = comps.size();
  std::size_t i = static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(n - 1)));
  std::size_t j = static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(n - 1)));
  if (i == j) return;
  if (comps[i] < comps[j]) std::swap(i, j);
  Rational s = make_rational(rand_range(rng, 1, 4), rand_range(rng, 9, 16));  // < 1/2
  Rational move = s * (comps[i] - comps[j]);
  comps[i] -= move;
  comps[j] += move;
}

ProbVector mixed_with_uniform(const ProbVector& y, const Rational& t,
                              std::mt19937_64& rng, int stirs) {
  Rational average = y.total() / static_cast<long>(y.dim());
  std::vector<Rational> comps;
  comps.reserve(y.dim());
  for (const Rational& v : y.components())
    comps.push_back((Rational(1) - t) * v + t * average);
  for (int s = 0; s < stirs; ++s) t_transform(comps, rng);
  return ProbVector::canonicalize(std::move(comps));
}

}  // namespace

ProbVector sample_interior(const ProbVector& y, const Rational& t, std::uint64_t rng_seed) {
  if (y.is_uniform()) fail(Errc::uniform_target, "interior of S(uniform) is empty");
  if (t <= 0 || t >= 1) fail(Errc::precondition_violated, "mixing weight must be in (0,1)");
  std::mt19937_64 rng(rng_seed);
  int stirs = static_cast<int>(rand_range(rng, 0, static_cast<long>(y.dim())));
  ProbVector x = mixed_with_uniform(y, t, rng, stirs);
  if (!strictly_majorized(x, y))
    throw std::logic_error("sample_interior: post-verification failed");
  return x;
}

ProbVector sample_majorized(const ProbVector& y, std::mt19937_64& rng) {
  Rational t = make_rational(rand_range(rng, 0, 4), 4);  // 0 and 1 included
  if (t == 1 || y.is_uniform())
    return ProbVector::from_sorted(std::vector<Rational>(
        y.dim(), y.total() / static_cast<long>(y.dim())));
  ProbVector x = mixed_with_uniform(y, t, rng, static_cast<int>(y.dim()));
  if (!majorizes(x, y)) throw std::logic_error("sample_majorized: post-verification failed");
  return x;
}

ProbVector sample_strict_interior(const ProbVector& y, std::mt19937_64& rng) {
  Rational t = make_rational(rand_range(rng, 1, 7), 8);
  return sample_interior(y, t, rng());
}

ProbVector sample_strict_super(const ProbVector& y, std::mt19937_64& rng) {
  long denom = rand_range(rng, 50, 200);
  std::vector<Rational> comps;
  comps.reserve(y.dim());
  for (const Rational& v : y.components())
    comps.push_back(v + make_rational(rand_range(rng, 1, 8), denom));
  ProbVector x = ProbVector::canonicalize(std::move(comps));
  if (!strictly_super_majorized(x, y))
    throw std::logic_error("sample_strict_super: post-verification failed");
  return x;
}

ProbVector sample_weak_super(const ProbVector& y, std::mt19937_64& rng) {
  long denom = rand_range(rng, 50, 200);
  std::vector<Rational> comps;
  comps.reserve(y.dim());
  for (const Rational& v : y.components())
    comps.push_back(v + make_rational(rand_range(rng, 0, 8), denom));
  ProbVector x = ProbVector::canonicalize(std::move(comps));
  if (!super_majorized(x, y))
    throw std::logic_error("sample_weak_super: post-verification failed");
  return x;
}

std::pair<bool, bool> check_overlap_sequence(const std::vector<OverlapFamilyMember>& family) {
  if (family.empty()) fail(Errc::precondition_violated, "empty overlap family");
  for (const auto& member : family)
    if (!strictly_majorized(member.x, member.y))
      fail(Errc::precondition_violated, "family member x is not strictly inside S(y)");

  // chain condition: some max-achieving member reaches some min-achieving
  // member through edges u -> v with min y^u < max y^v
  std::size_t m = family.size();
  Rational global_max = family[0].y[0];
  Rational global_min = family[0].y[family[0].y.dim() - 1];
  for (const auto& member : family) {
    global_max = std::max(global_max, member.y[0]);
    global_min = std::min(global_min, member.y[member.y.dim() - 1]);
  }
  std::vector<char> reached(m, 0);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < m; ++i)
    if (family[i].y[0] == global_max) {
      reached[i] = 1;
      queue.push_back(i);
    }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    const Rational& min_u = family[u].y[family[u].y.dim() - 1];
    for (std::size_t v = 0; v < m; ++v)
      if (!reached[v] && min_u < family[v].y[0]) {
        reached[v] = 1;
        queue.push_back(v);
      }
  }
  bool chain = false;
  for (std::size_t i = 0; i < m; ++i)
    if (reached[i] && family[i].y[family[i].y.dim() - 1] == global_min) chain = true;

  // direct route: concatenate the copies and compare the sorted prefix sums
  ProbVector xs, ys;
  for (const auto& member : family)
    for (unsigned long r = 0; r < member.copies; ++r) {
      xs = xs.empty() ? member.x : direct_sum(xs, member.x);
      ys = ys.empty() ? member.y : direct_sum(ys, member.y);
    }
  bool direct = strictly_majorized(xs, ys);
  return {chain, direct};
}

std::pair<bool, bool> check_tensor_power_lemma(const ProbVector& y, std::size_t d,
                                               unsigned long k, std::size_t size_cap) {
  std::size_t n = y.dim();
  bool closed = pow_rational(y[d - 1], k) < pow_rational(y[0], k - 1) * y[d] &&
                pow_rational(y[d], k) > pow_rational(y[n - 1], k - 1) * y[d - 1];
  ProbVector witness = kd_witness(y, d);
  bool direct = strictly_majorized(tensor_power(witness, k, size_cap),
                                   tensor_power(y, k, size_cap));
  return {closed, direct};
}

std::pair<bool, bool> check_prob_boundary_lemma(const ProbVector& y, std::size_t d,
                                                unsigned long k, const ProbThreshold& t,
                                                std::size_t size_cap) {
  std::size_t n = y.dim();
  bool closed = pow_rational(y[d], k) > pow_rational(y[n - 1], k - 1) * y[d - 1];
  ProbVector witness = kd_lambda_witness(y, d, t).vector;
  bool direct = strictly_super_majorized(
      tensor_power(witness, k, size_cap),
      scale(tensor_power(y, k, size_cap), pow_rational(t.lambda, k)));
  return {closed, direct};
}

namespace {

ProbVector perturb_extremes_checked(const ProbVector& x, const Rational& eps) {
  std::vector<Rational> comps = x.components();
  comps.front() += eps;
  comps.back() -= eps;
  return ProbVector::canonicalize(std::move(comps));
}

}  // namespace

bool check_perturbation_interior(const ProbVector& y, const ProbVector& c,
                                 const ProbVector& x, const Rational& eps) {
  ProbVector target = tensor(y, c);
  if (!strictly_majorized(tensor(x, c), target)) return false;
  Rational e = eps;
  const Rational& smallest = x[x.dim() - 1];
  if (smallest == 0) return false;  // perturbation would leave the simplex
  if (e > smallest / 2) e = smallest / 2;
  for (int iter = 0; iter < 64; ++iter) {
    if (majorizes(tensor(perturb_extremes_checked(x, e), c), target)) return true;
    e /= 2;
  }
  return false;
}

// ---------------------------------------------------------------------------
// fuzzing suites
// ---------------------------------------------------------------------------

namespace {

struct SuiteRunner {
  OracleReport report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit SuiteRunner(std::string id, const OracleConfig& cfg) {
    report.lemma_id = std::move(id);
    report.trials = cfg.trials;
    report.seed = cfg.seed;
  }

  void counterexample(std::uint64_t trial, const std::string& detail) {
    report.counterexamples.push_back("trial " + std::to_string(trial) + ": " + detail);
  }

  OracleReport finish() {
    report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return std::move(report);
  }
};

std::string show(const char* name, const ProbVector& v) {
  return std::string(name) + "=[" + vector_to_text(v) + "]";
}

}  // namespace

OracleReport check_direct_sum_lemma(const OracleConfig& cfg) {
  SuiteRunner run("direct-sum", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n1 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    std::size_t n2 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    ProbVector y = random_nonuniform_target(rng, n1, cfg.max_component, trial % 3 == 0);
    ProbVector y2 = random_nonuniform_target(rng, n2, cfg.max_component, false);
    ProbVector x = sample_strict_interior(y, rng);
    ProbVector x2 = sample_strict_interior(y2, rng);
    if (trial % 5 == 0 && y[n1 - 1] > 0) {
      // engineered separation: push y2 entirely below min(y)
      Rational f = y[n1 - 1] / y2[0];
      if (trial % 10 != 0) f /= 2;  // alternate strict gap and exact tie
      y2 = scale(y2, f);
      x2 = scale(x2, f);
    }
    bool closed = y[0] > y2[n2 - 1] && y2[0] > y[n1 - 1];
    bool direct = strictly_majorized(direct_sum(x, x2), direct_sum(y, y2));
    if (closed != direct)
      run.counterexample(trial, show("y", y) + " " + show("y'", y2) + " " + show("x", x) +
                                    " " + show("x'", x2) + " closed=" +
                                    std::to_string(closed) + " direct=" +
                                    std::to_string(direct));
  }
  return run.finish();
}

OracleReport check_overlap_suite(const OracleConfig& cfg) {
  SuiteRunner run("overlap", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::vector<OverlapFamilyMember> family;
    bool binomial = trial % 3 == 0;
    std::optional<bool> expected;
    if (binomial) {
      // family from the binomial expansion of (y' + y'')^k at a valid split
      std::size_t n = static_cast<std::size_t>(rand_range(rng, 4, 5));
      ProbVector y;
      std::size_t d = 0;
      for (int attempt = 0;; ++attempt) {
        y = random_target(rng, n, cfg.max_component, trial % 6 == 0);
        std::vector<std::size_t> valid;
        for (std::size_t cand = 2; cand + 2 <= n; ++cand)
          if (kd_nonempty(y, cand)) valid.push_back(cand);
        if (!valid.empty()) {
          d = valid[static_cast<std::size_t>(
              rand_range(rng, 0, static_cast<long>(valid.size() - 1)))];
          break;
        }
        if (attempt > 256) throw std::logic_error("overlap suite: sampling starved");
      }
      unsigned long k = static_cast<unsigned long>(rand_range(rng, 2, 3));
      auto half = [&](std::size_t from, std::size_t to) {
        return ProbVector::from_sorted(std::vector<Rational>(
            y.components().begin() + from, y.components().begin() + to));
      };
      ProbVector yh = half(0, d), yt = half(d, n);
      ProbVector xh = sample_strict_interior(yh, rng);
      ProbVector xt = sample_strict_interior(yt, rng);
      unsigned long binom = 1;
      for (unsigned long i = 0; i <= k; ++i) {
        OverlapFamilyMember member;
        member.copies = binom;
        member.y = i == 0 ? tensor_power(yh, k)
                          : (i == k ? tensor_power(yt, k)
                                    : tensor(tensor_power(yh, k - i), tensor_power(yt, i)));
        member.x = i == 0 ? tensor_power(xh, k)
                          : (i == k ? tensor_power(xt, k)
                                    : tensor(tensor_power(xh, k - i), tensor_power(xt, i)));
        family.push_back(std::move(member));
        binom = binom * (k - i) / (i + 1);
      }
      // for binomial families both routes must also match the power condition
      expected = pow_rational(y[d - 1], k) < pow_rational(y[0], k - 1) * y[d] &&
                 pow_rational(y[d], k) > pow_rational(y[n - 1], k - 1) * y[d - 1];
    } else {
      std::size_t members = static_cast<std::size_t>(rand_range(rng, 1, 3));
      for (std::size_t i = 0; i < members; ++i) {
        OverlapFamilyMember member;
        std::size_t dim = static_cast<std::size_t>(rand_range(rng, 2, 4));
        member.y = random_nonuniform_target(rng, dim, cfg.max_component, false);
        if (rand_range(rng, 0, 1) == 1)
          member.y = scale(member.y, make_rational(rand_range(rng, 1, 8),
                                                   rand_range(rng, 1, 8)));
        member.x = sample_strict_interior(member.y, rng);
        member.copies = static_cast<unsigned long>(rand_range(rng, 1, 3));
        family.push_back(std::move(member));
      }
    }
    auto [chain, direct] = check_overlap_sequence(family);
    bool bad = chain != direct || (expected && chain != *expected);
    if (bad) {
      std::ostringstream detail;
      for (std::size_t i = 0; i < family.size(); ++i)
        detail << show(("y" + std::to_string(i)).c_str(), family[i].y) << " copies="
               << family[i].copies << " " << show(("x" + std::to_string(i)).c_str(), family[i].x)
               << " ";
      detail << "chain=" << chain << " direct=" << direct;
      if (expected) detail << " closed=" << *expected;
      run.counterexample(trial, detail.str());
    }
  }
  return run.finish();
}

OracleReport check_lginterior(const OracleConfig& cfg) {
  SuiteRunner run("lginterior", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    ProbVector y = random_nonuniform_target(rng, n, cfg.max_component, trial % 4 == 1);
    std::size_t kc = static_cast<std::size_t>(rand_range(rng, 2, 4));
    ProbVector c = random_positive_vector(rng, kc, cfg.max_component);
    if (trial % 4 == 0 && y[n - 1] > 0) {
      // boundary case: l_u(c) exactly g_u(y)
      Rational g = global_uniformity(y);
      c = ProbVector::from_sorted({Rational(1), g});
    }
    ProbVector x = sample_strict_interior(y, rng);
    bool closed = local_uniformity(c) > global_uniformity(y);
    bool direct = strictly_majorized(tensor(x, c), tensor(y, c));
    if (closed != direct)
      run.counterexample(trial, show("y", y) + " " + show("c", c) + " " + show("x", x) +
                                    " closed=" + std::to_string(closed) +
                                    " direct=" + std::to_string(direct));
  }
  return run.finish();
}

OracleReport check_tensor_power_suite(const OracleConfig& cfg) {
  SuiteRunner run("tensor-power", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n = static_cast<std::size_t>(
        rand_range(rng, 4, static_cast<long>(std::max<std::size_t>(4, cfg.max_dim))));
    ProbVector y;
    std::size_t d = 0;
    for (int attempt = 0;; ++attempt) {
      y = random_target(rng, n, cfg.max_component, trial % 5 == 0);
      std::vector<std::size_t> valid;
      for (std::size_t cand = 2; cand + 2 <= n; ++cand)
        if (kd_nonempty(y, cand)) valid.push_back(cand);
      if (!valid.empty()) {
        d = valid[static_cast<std::size_t>(
            rand_range(rng, 0, static_cast<long>(valid.size() - 1)))];
        break;
      }
      if (attempt > 256) throw std::logic_error("tensor-power suite: sampling starved");
    }
    unsigned long k =
        static_cast<unsigned long>(rand_range(rng, 1, static_cast<long>(cfg.max_k)));
    auto [closed, direct] = check_tensor_power_lemma(y, d, k);
    bool bad = closed != direct;
    // the lemma covers every member of K_d(y), so probe a random one as well
    auto half = [&](std::size_t from, std::size_t to) {
      return ProbVector::from_sorted(std::vector<Rational>(
          y.components().begin() + from, y.components().begin() + to));
    };
    ProbVector member = direct_sum(sample_strict_interior(half(0, d), rng),
                                   sample_strict_interior(half(d, n), rng));
    bool member_direct =
        strictly_majorized(tensor_power(member, k), tensor_power(y, k));
    bad = bad || member_direct != closed;
    if (bad)
      run.counterexample(trial, show("y", y) + " d=" + std::to_string(d) + " k=" +
                                    std::to_string(k) + " closed=" + std::to_string(closed) +
                                    " direct=" + std::to_string(direct) + " member_direct=" +
                                    std::to_string(member_direct) + " " +
                                    show("member", member));
  }
  return run.finish();
}

OracleReport check_strictsuper_lemma(const OracleConfig& cfg) {
  SuiteRunner run("strict-super", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n1 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    std::size_t n2 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));

    // clause 1: strict-super pairs stay strict under direct sums
    ProbVector y = random_target(rng, n1, cfg.max_component, trial % 4 == 2);
    ProbVector y2 = random_target(rng, n2, cfg.max_component, false);
    ProbVector x = sample_strict_super(y, rng);
    ProbVector x2 = sample_strict_super(y2, rng);
    if (!strictly_super_majorized(direct_sum(x, x2), direct_sum(y, y2)))
      run.counterexample(trial, "clause1 " + show("y", y) + " " + show("y'", y2) + " " +
                                    show("x", x) + " " + show("x'", x2));

    // clause 2: mixed strict-super / strict-interior pair, exact overlap test
    ProbVector yb = random_nonuniform_target(rng, n2, cfg.max_component, false);
    ProbVector xb = sample_strict_interior(yb, rng);
    ProbVector ya = y, xa = x;
    if (trial % 3 == 0 && ya[n1 - 1] > 0) {
      // lift ya above max(yb) so the overlap condition fails (tie or gap)
      Rational f = yb[0] / ya[n1 - 1];
      if (trial % 6 != 0) f *= 2;
      ya = scale(ya, f);
      xa = scale(xa, f);
    }
    bool cond = yb[0] > ya[n1 - 1];
    bool direct = strictly_super_majorized(direct_sum(xa, xb), direct_sum(ya, yb));
    if (cond != direct)
      run.counterexample(trial, "clause2 " + show("y", ya) + " " + show("y'", yb) + " " +
                                    show("x", xa) + " " + show("x'", xb) + " cond=" +
                                    std::to_string(cond) + " direct=" +
                                    std::to_string(direct));

    // clause 3: tensor with a positive weak-super factor stays strict
    ProbVector yc = random_target(rng, n2, cfg.max_component, false);
    ProbVector xc = sample_weak_super(yc, rng);
    if (!xc.strictly_positive()) {
      std::vector<Rational> comps = xc.components();
      for (Rational& v : comps) v += make_rational(1, 256);
      xc = ProbVector::from_sorted(std::move(comps));
    }
    if (!strictly_super_majorized(tensor(x, xc), tensor(y, yc)))
      run.counterexample(trial, "clause3 " + show("y", y) + " " + show("y'", yc) + " " +
                                    show("x", x) + " " + show("x'", xc));

    // corollary: separated strict-interior blocks appended to a strict-super
    // head; the condition is max(last block) > min(head)
    std::vector<ProbVector> fam_y, fam_x;
    std::size_t blocks = static_cast<std::size_t>(rand_range(rng, 1, 3));
    for (std::size_t b = 0; b < blocks; ++b) {
      std::size_t nb = static_cast<std::size_t>(rand_range(rng, 2, 3));
      ProbVector yb2 = random_nonuniform_target(rng, nb, cfg.max_component, false);
      if (b > 0) {
        // keep blocks non-interleaving: max of this block <= min of previous
        Rational f = fam_y.back()[fam_y.back().dim() - 1] / yb2[0];
        if (rand_range(rng, 0, 1) == 1) f /= 2;  // strict gap or exact tie
        yb2 = scale(yb2, f);
      }
      fam_y.push_back(yb2);
      fam_x.push_back(sample_strict_interior(yb2, rng));
    }
    ProbVector y0 = random_target(rng, n1, cfg.max_component, false);
    ProbVector x0 = sample_strict_super(y0, rng);
    if (rand_range(rng, 0, 2) == 0) {
      // lift the head so the corollary condition fails
      Rational f = fam_y.back()[0] / y0[n1 - 1];
      if (rand_range(rng, 0, 1) == 1) f *= 2;
      y0 = scale(y0, f);
      x0 = scale(x0, f);
    }
    ProbVector ys2 = y0, xs2 = x0;
    for (std::size_t b = 0; b < fam_y.size(); ++b) {
      ys2 = direct_sum(ys2, fam_y[b]);
      xs2 = direct_sum(xs2, fam_x[b]);
    }
    bool cond_cor = fam_y.back()[0] > y0[n1 - 1];
    bool direct_cor = strictly_super_majorized(xs2, ys2);
    if (cond_cor != direct_cor) {
      std::ostringstream detail;
      detail << "corollary " << show("y0", y0) << " " << show("x0", x0) << " ";
      for (std::size_t b = 0; b < fam_y.size(); ++b)
        detail << show(("yb" + std::to_string(b)).c_str(), fam_y[b]) << " "
               << show(("xb" + std::to_string(b)).c_str(), fam_x[b]) << " ";
      detail << "cond=" << cond_cor << " direct=" << direct_cor;
      run.counterexample(trial, detail.str());
    }
  }
  return run.finish();
}

OracleReport check_LP(const OracleConfig& cfg) {
  SuiteRunner run("lp", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n1 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    std::size_t n2 = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    ProbVector y = random_nonuniform_target(rng, n1, cfg.max_component, false);
    ProbVector y2 = random_nonuniform_target(rng, n2, cfg.max_component, false);
    if (trial % 4 == 0 && y[n1 - 1] > 0) {
      ProbVector scaled = scale(y2, y[n1 - 1] / y2[0] / 2);
      y2 = scaled;  // force the non-overlapping, all-out branch
    }
    ProbVector target = direct_sum(y, y2);
    auto member = [&]() {
      return direct_sum(sample_strict_interior(y, rng), sample_strict_interior(y2, rng));
    };
    bool first = strictly_majorized(member(), target);
    for (int j = 0; j < cfg.lp_members; ++j) {
      if (strictly_majorized(member(), target) != first) {
        run.counterexample(trial, show("y", y) + " " + show("y'", y2) +
                                      " first=" + std::to_string(first) +
                                      " divergent member at j=" + std::to_string(j));
        break;
      }
    }
  }
  return run.finish();
}

OracleReport check_prob_boundary_suite(const OracleConfig& cfg) {
  SuiteRunner run("prob-boundary", cfg);
  const Rational lambdas[] = {make_rational(1, 4), make_rational(1, 2),
                              make_rational(3, 4), make_rational(9, 10)};
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n = static_cast<std::size_t>(
        rand_range(rng, 3, static_cast<long>(std::max<std::size_t>(3, cfg.max_dim))));
    ProbVector y;
    std::size_t d = 0;
    for (int attempt = 0;; ++attempt) {
      y = random_target(rng, n, cfg.max_component, trial % 5 == 0);
      std::vector<std::size_t> valid;
      for (std::size_t cand = 1; cand + 2 <= n; ++cand)
        if (y[cand] > y[n - 1]) valid.push_back(cand);
      if (!valid.empty()) {
        d = valid[static_cast<std::size_t>(
            rand_range(rng, 0, static_cast<long>(valid.size() - 1)))];
        break;
      }
      if (attempt > 256) throw std::logic_error("prob-boundary suite: sampling starved");
    }
    unsigned long k =
        static_cast<unsigned long>(rand_range(rng, 1, static_cast<long>(cfg.max_k)));
    ProbThreshold t(lambdas[rand_range(rng, 0, 3)]);
    auto [closed, direct] = check_prob_boundary_lemma(y, d, k, t);
    if (closed != direct)
      run.counterexample(trial, show("y", y) + " d=" + std::to_string(d) + " k=" +
                                    std::to_string(k) + " lambda=" + to_fraction(t.lambda) +
                                    " closed=" + std::to_string(closed) + " direct=" +
                                    std::to_string(direct));
  }
  return run.finish();
}

OracleReport check_perturbation_suite(const OracleConfig& cfg) {
  SuiteRunner run("perturbation", cfg);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(mix_seed(cfg.seed, trial));
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 2, static_cast<long>(cfg.max_dim)));
    ProbVector y = random_nonuniform_target(rng, n, cfg.max_component, false);
    // geometric catalyst with ratio above g_u(y) guarantees the premise
    Rational g = global_uniformity(y);
    Rational ratio = (g + 1) / 2;
    std::size_t kc = static_cast<std::size_t>(rand_range(rng, 2, 3));
    std::vector<Rational> comps;
    Rational v(1);
    for (std::size_t i = 0; i < kc; ++i) {
      comps.push_back(v);
      v *= ratio;
    }
    ProbVector c = ProbVector::from_sorted(std::move(comps));
    ProbVector x = sample_strict_interior(y, rng);
    if (!check_perturbation_interior(y, c, x, make_rational(1, 50)))
      run.counterexample(trial, show("y", y) + " " + show("c", c) + " " + show("x", x) +
                                    " no feasible perturbation");
  }
  return run.finish();
}

const std::vector<std::string>& oracle_suite_names() {
  static const std::vector<std::string> names = {
      "direct-sum", "overlap",      "lginterior",    "tensor-power",
      "strict-super", "lp",          "prob-boundary", "perturbation"};
  return names;
}

OracleReport run_oracle_suite(const std::string& name, const OracleConfig& cfg) {
  if (name == "direct-sum") return check_direct_sum_lemma(cfg);
  if (name == "overlap") return check_overlap_suite(cfg);
  if (name == "lginterior") return check_lginterior(cfg);
  if (name == "tensor-power") return check_tensor_power_suite(cfg);
  if (name == "strict-super") return check_strictsuper_lemma(cfg);
  if (name == "lp") return check_LP(cfg);
  if (name == "prob-boundary") return check_prob_boundary_suite(cfg);
  if (name == "perturbation") return check_perturbation_suite(cfg);
  fail(Errc::unknown_suite, "no oracle suite named '" + name + "'");
}

std::vector<OracleReport> run_all_suites(const OracleConfig& cfg) {
  std::vector<OracleReport> reports;
  reports.reserve(oracle_suite_names().size());
  for (const std::string& name : oracle_suite_names())
    reports.push_back(run_oracle_suite(name, cfg));
  return reports;
}

}  // namespace elocc
