#include "elocc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "elocc/errors.hpp"
#include "elocc/vector_io.hpp"

namespace elocc::cli {

namespace {

std::vector<std::string> fractions(const ProbVector& v) {
  std::vector<std::string> out;
  out.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(to_fraction(v[i]));
  return out;
}

ProbVector vector_from_fractions(const std::vector<std::string>& parts) {
  std::vector<Rational> comps;
  comps.reserve(parts.size());
  for (const std::string& p : parts) comps.push_back(parse_rational(p));
  return ProbVector::canonicalize(std::move(comps));
}

std::size_t env_size_cap() {
  if (const char* raw = std::getenv("ELOCC_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(raw, &end, 10);
    if (end && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
  }
  return kDefaultSizeCap;
}

class Stopwatch {
 public:
  std::int64_t us() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::useful: return "useful";
    case Decision::not_useful: return "not_useful";
    case Decision::yes: return "true";
    case Decision::no: return "false";
    case Decision::value: return "value";
  }
  return "value";
}

namespace {

Decision decision_from_name(const std::string& name) {
  if (name == "useful") return Decision::useful;
  if (name == "not_useful") return Decision::not_useful;
  if (name == "true") return Decision::yes;
  if (name == "false") return Decision::no;
  return Decision::value;
}

}  // namespace

int Report::exit_code() const {
  return decision == Decision::not_useful || decision == Decision::no ? 1 : 0;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["decision"] = decision_name(report.decision);
  if (report.certificate) {
    const UsefulnessCertificate& cert = *report.certificate;
    nlohmann::json jc;
    jc["d"] = cert.d;
    jc["witness"] = fractions(cert.witness);
    jc["catalyst"] = cert.catalyst ? nlohmann::json(fractions(*cert.catalyst))
                                   : nlohmann::json(nullptr);
    if (cert.segment) {
      nlohmann::json js;
      js["start"] = cert.segment->start;
      js["end"] = cert.segment->end;
      std::vector<std::string> vals;
      for (const Rational& v : cert.segment->values) vals.push_back(to_fraction(v));
      js["values"] = vals;
      jc["segment"] = js;
    } else {
      jc["segment"] = nullptr;
    }
    nlohmann::json transcript = nlohmann::json::array();
    for (const Inequality& entry : cert.transcript)
      transcript.push_back({{"label", entry.label},
                            {"lhs", to_fraction(entry.lhs)},
                            {"rhs", to_fraction(entry.rhs)},
                            {"rel", std::string(1, entry.rel)}});
    jc["transcript"] = transcript;
    j["certificate"] = jc;
  } else {
    j["certificate"] = nullptr;
  }
  if (report.pmax) {
    j["pmax"] = {{"value", to_fraction(report.pmax->value)},
                 {"argmin_l", report.pmax->argmin_l},
                 {"skipped", report.pmax->skipped}};
  } else {
    j["pmax"] = nullptr;
  }
  j["values"] = report.values;
  j["notes"] = report.notes;
  j["timings_us"] = report.timings_us;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report report;
  report.command = j.at("command").get<std::string>();
  report.inputs = j.at("inputs").get<std::map<std::string, std::vector<std::string>>>();
  report.decision = decision_from_name(j.at("decision").get<std::string>());
  if (!j.at("certificate").is_null()) {
    const nlohmann::json& jc = j.at("certificate");
    UsefulnessCertificate cert;
    cert.d = jc.at("d").get<std::size_t>();
    cert.witness = vector_from_fractions(jc.at("witness").get<std::vector<std::string>>());
    if (!jc.at("catalyst").is_null())
      cert.catalyst =
          vector_from_fractions(jc.at("catalyst").get<std::vector<std::string>>());
    if (!jc.at("segment").is_null()) {
      Segment seg;
      seg.start = jc.at("segment").at("start").get<std::size_t>();
      seg.end = jc.at("segment").at("end").get<std::size_t>();
      for (const auto& v : jc.at("segment").at("values"))
        seg.values.push_back(parse_rational(v.get<std::string>()));
      cert.segment = std::move(seg);
    }
    for (const auto& entry : jc.at("transcript")) {
      Inequality ineq;
      ineq.label = entry.at("label").get<std::string>();
      ineq.lhs = parse_rational(entry.at("lhs").get<std::string>());
      ineq.rhs = parse_rational(entry.at("rhs").get<std::string>());
      ineq.rel = entry.at("rel").get<std::string>().at(0);
      cert.transcript.push_back(std::move(ineq));
    }
    report.certificate = std::move(cert);
  }
  if (!j.at("pmax").is_null()) {
    PmaxResult pm;
    pm.value = parse_rational(j.at("pmax").at("value").get<std::string>());
    pm.argmin_l = j.at("pmax").at("argmin_l").get<std::size_t>();
    pm.skipped = j.at("pmax").at("skipped").get<std::vector<std::size_t>>();
    report.pmax = std::move(pm);
  }
  report.values = j.at("values").get<std::map<std::string, std::string>>();
  report.notes = j.at("notes").get<std::vector<std::string>>();
  report.timings_us = j.at("timings_us").get<std::map<std::string, std::int64_t>>();
  return report;
}

bool operator==(const Report& a, const Report& b) { return to_json(a) == to_json(b); }

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [name, parts] : report.inputs) {
    out << "  " << name << " = (";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << ", ";
      out << parts[i];
    }
    out << ")\n";
  }
  out << "decision: " << decision_name(report.decision) << "\n";
  for (const auto& [key, value] : report.values) out << "  " << key << " = " << value << "\n";
  if (report.pmax) {
    out << "  pmax = " << format_rational(report.pmax->value) << " at l = "
        << report.pmax->argmin_l;
    if (!report.pmax->skipped.empty()) {
      out << ", skipped l = {";
      for (std::size_t i = 0; i < report.pmax->skipped.size(); ++i) {
        if (i) out << ", ";
        out << report.pmax->skipped[i];
      }
      out << "}";
    }
    out << "\n";
  }
  if (report.certificate) {
    const UsefulnessCertificate& cert = *report.certificate;
    out << "certificate:\n  d = " << cert.d << "\n  witness = (";
    for (std::size_t i = 0; i < cert.witness.dim(); ++i) {
      if (i) out << ", ";
      out << cert.witness[i];
    }
    out << ")\n";
    if (cert.catalyst) {
      out << "  catalyst = (";
      for (std::size_t i = 0; i < cert.catalyst->dim(); ++i) {
        if (i) out << ", ";
        out << (*cert.catalyst)[i];
      }
      out << ")\n";
    }
    if (cert.segment)
      out << "  segment = c[" << cert.segment->start << ".." << cert.segment->end << "]\n";
    out << "  transcript: " << cert.transcript.size() << " verified inequalities\n";
    std::size_t shown = std::min<std::size_t>(cert.transcript.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) {
      const Inequality& entry = cert.transcript[i];
      out << "    " << entry.label << ": " << entry.lhs << " " << entry.rel << " "
          << entry.rhs << "\n";
    }
    if (shown < cert.transcript.size())
      out << "    ... (" << cert.transcript.size() - shown << " more)\n";
  }
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

Report cmd_majorize(const std::filesystem::path& x_file,
                    const std::filesystem::path& y_file, const MajorizeOptions& opts) {
  Report report;
  report.command = "majorize";
  ProbVector x = read_vector_file(x_file);
  ProbVector y = read_vector_file(y_file);
  report.inputs["x"] = fractions(x);
  report.inputs["y"] = fractions(y);
  if (opts.lambda && !opts.super && !opts.strict_super)
    fail(Errc::precondition_violated, "--lambda requires --super or --strict-super");

  Stopwatch timer;
  bool holds = false;
  std::string relation;
  if (opts.strict_super || opts.super) {
    ProbVector target = y;
    if (opts.lambda) {
      ProbThreshold t(*opts.lambda);  // validates 0 < lambda < 1
      target = scale(y, t.lambda);
      report.values["lambda"] = to_fraction(*opts.lambda);
    }
    holds = opts.strict_super ? strictly_super_majorized(x, target)
                              : super_majorized(x, target);
    relation = opts.strict_super ? "strictly_super_majorized" : "super_majorized";
  } else if (opts.strict) {
    holds = strictly_majorized(x, y);
    relation = "strictly_majorized";
  } else {
    holds = majorizes(x, y);
    relation = "majorizes";
  }
  report.timings_us["total"] = timer.us();
  report.values["relation"] = relation;
  report.decision = holds ? Decision::yes : Decision::no;
  return report;
}

Report cmd_pmax(const std::filesystem::path& x_file, const std::filesystem::path& y_file) {
  Report report;
  report.command = "pmax";
  ProbVector x = read_vector_file(x_file);
  ProbVector y = read_vector_file(y_file);
  report.inputs["x"] = fractions(x);
  report.inputs["y"] = fractions(y);
  Stopwatch timer;
  report.pmax = pmax(x, y);
  report.timings_us["total"] = timer.us();
  report.values["pmax"] = to_fraction(report.pmax->value);
  report.values["pmax_decimal"] = std::to_string(to_double(report.pmax->value));
  report.decision = Decision::value;
  return report;
}

Report cmd_catalyst_useful(const std::filesystem::path& y_file,
                           const std::filesystem::path& c_file, bool prob) {
  Report report;
  report.command = prob ? "catalyst-useful --prob" : "catalyst-useful";
  ProbVector y = read_vector_file(y_file);
  ProbVector c = read_vector_file(c_file);
  report.inputs["y"] = fractions(y);
  report.inputs["c"] = fractions(c);
  Stopwatch timer;
  auto cert = prob ? prob_catalyst_useful(y, c) : catalyst_useful(y, c);
  report.timings_us["total"] = timer.us();
  if (cert) {
    report.certificate = std::move(*cert);
    report.decision = Decision::useful;
  } else {
    report.decision = Decision::not_useful;
    report.notes.push_back(prob
                               ? "no split d and suffix segment satisfy both uniformity bounds"
                               : "proven negative: no split d certifies the decomposition test");
  }
  return report;
}

Report cmd_k_useful(const std::filesystem::path& y_file, unsigned long k, bool prob) {
  Report report;
  report.command = prob ? "k-useful --prob" : "k-useful";
  ProbVector y = read_vector_file(y_file);
  report.inputs["y"] = fractions(y);
  report.values["k"] = std::to_string(k);
  Stopwatch timer;
  auto cert = prob ? prob_k_useful(y, k) : k_useful(y, k);
  report.timings_us["total"] = timer.us();
  if (cert) {
    report.certificate = std::move(*cert);
    report.decision = Decision::useful;
  } else {
    report.decision = Decision::not_useful;
  }
  return report;
}

Report cmd_min_k(const std::filesystem::path& y_file, bool prob) {
  Report report;
  report.command = prob ? "min-k --prob" : "min-k";
  ProbVector y = read_vector_file(y_file);
  report.inputs["y"] = fractions(y);
  Stopwatch timer;
  auto min_k = prob ? prob_min_useful_k(y) : min_useful_k(y);
  if (min_k) {
    auto cert = prob ? prob_k_useful(y, *min_k) : k_useful(y, *min_k);
    report.timings_us["total"] = timer.us();
    report.values["min_k"] = std::to_string(*min_k);
    report.certificate = std::move(*cert);
    report.decision = Decision::useful;
  } else {
    report.timings_us["total"] = timer.us();
    report.values["min_k"] = "never";
    report.notes.push_back(
        prob ? "y_2 = y_n: probabilistic catalysis can never help this target"
             : "y_d = y_1 or y_{d+1} = y_n at every split d: no finite k helps");
    report.decision = Decision::not_useful;
  }
  return report;
}

Report cmd_construct(const std::filesystem::path& y_file, std::size_t d, unsigned long k) {
  Report report;
  report.command = "construct";
  ProbVector y = read_vector_file(y_file);
  report.inputs["y"] = fractions(y);
  report.values["d"] = std::to_string(d);
  report.values["k"] = std::to_string(k);
  Stopwatch timer;
  ProbVector c = construct_catalyst(y, d, k);
  report.timings_us["total"] = timer.us();
  report.inputs["catalyst"] = fractions(c);
  report.notes.push_back("catalyst verified against the two-sided uniformity test");
  report.decision = Decision::value;
  return report;
}

Report cmd_decompose(const std::filesystem::path& c_file, const Rational& alpha) {
  Report report;
  report.command = "decompose";
  ProbVector c = read_vector_file(c_file);
  report.inputs["c"] = fractions(c);
  report.values["alpha"] = to_fraction(alpha);
  Stopwatch timer;
  SegmentDecomposition dec = decompose(c, alpha);
  report.timings_us["total"] = timer.us();
  report.values["block_count"] = std::to_string(dec.blocks.size());
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    std::vector<std::string> parts;
    for (const Rational& v : dec.blocks[b].values) parts.push_back(to_fraction(v));
    report.inputs["block" + std::to_string(b + 1)] = parts;
    report.notes.push_back("block " + std::to_string(b + 1) + " = c[" +
                           std::to_string(dec.blocks[b].start) + ".." +
                           std::to_string(dec.blocks[b].end) + "]");
  }
  report.decision = Decision::value;
  return report;
}

namespace {

void check(Report& report, bool ok, const std::string& what) {
  report.notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  if (!ok) report.decision = Decision::no;
}

Report examples_jp(std::size_t size_cap) {
  Report report;
  report.command = "examples jp";
  report.decision = Decision::yes;
  ProbVector x = parse_vector_text("0.4 0.4 0.1 0.1");
  ProbVector y = parse_vector_text("0.5 0.25 0.25 0");
  ProbVector c = parse_vector_text("0.6 0.4");
  report.inputs["x"] = fractions(x);
  report.inputs["y"] = fractions(y);
  report.inputs["c"] = fractions(c);

  check(report, !majorizes(x, y), "x does not majorize into y (plain LOCC impossible)");
  check(report, majorizes(tensor(x, c), tensor(y, c)),
        "x (x) c -> y (x) c succeeds: c catalyzes the transformation");
  check(report, majorizes(tensor_power(x, 3, size_cap), tensor_power(y, 3, size_cap)),
        "three joint copies convert: x^(x)3 -> y^(x)3");
  PmaxResult pm = pmax(x, y);
  report.pmax = pm;
  check(report, pm.value == make_rational(4, 5) && pm.argmin_l == 2,
        "pmax(x -> y) = 4/5 at l = 2");
  auto cert = catalyst_useful(y, c);
  check(report, cert.has_value() && cert->d == 2, "catalyst_useful(y, c) certifies d = 2");
  if (cert) report.certificate = std::move(*cert);
  return report;
}

Report examples_dk() {
  Report report;
  report.command = "examples dk";
  report.decision = Decision::yes;
  // z_1/z_k = alpha/beta with alpha = 0.6, beta = 0.4
  ProbVector z = parse_vector_text("0.6 0.4");
  ProbVector x = parse_vector_text("0.4 0.4 0.1 0.1");  // (a/2+b/4, a/2+b/4, b/4, b/4)
  ProbVector y = parse_vector_text("0.6 0.2 0.2 0");    // (a, b/2, b/2, 0)
  report.inputs["z"] = fractions(z);
  report.inputs["x"] = fractions(x);
  report.inputs["y"] = fractions(y);

  ProbVector xz = tensor(x, z), yz = tensor(y, z);
  check(report, strictly_majorized(xz, yz),
        "x (x) z strictly inside S(y (x) z): all 7 prefix inequalities strict");
  for (std::size_t m = 1; m < xz.dim(); ++m)
    report.notes.push_back("  e_" + std::to_string(m) + ": " + to_fraction(xz.e_sum(m)) +
                           " < " + to_fraction(yz.e_sum(m)));
  check(report, sufficient_condition(y, z, 2),
        "two-sided uniformity test holds at d = 2");

  // perturbation x(e) = (x_1+e, x_2, x_3, x_4-e): outside S(y), still catalyzed
  Rational eps = make_rational(1, 10);
  bool found = false;
  for (int iter = 0; iter < 64 && !found; ++iter) {
    if (eps < x[3]) {
      std::vector<Rational> comps = x.components();
      comps.front() += eps;
      comps.back() -= eps;
      ProbVector xe = ProbVector::canonicalize(std::move(comps));
      if (!majorizes(xe, y) && majorizes(tensor(xe, z), tensor(y, z))) {
        found = true;
        report.values["epsilon"] = to_fraction(eps);
        report.inputs["x_eps"] = fractions(xe);
        break;
      }
    }
    eps /= 2;
  }
  check(report, found, "found rational e > 0 with x(e) outside S(y) yet inside T(y,z)");
  return report;
}

Report examples_yk(unsigned long k) {
  Report report;
  report.command = "examples yk";
  report.decision = Decision::yes;
  if (k < 2) fail(Errc::precondition_violated, "yk example needs k >= 2");
  // y = (1, a, a^k, b)/C with a = 1/2 and b = a^{k+3} < a^{k+2}
  Rational a = make_rational(1, 2);
  Rational b = pow_rational(a, k + 3);
  std::vector<Rational> comps = {Rational(1), a, pow_rational(a, k), b};
  ProbVector y = normalized(ProbVector::canonicalize(std::move(comps)));
  report.inputs["y"] = fractions(y);
  report.values["k"] = std::to_string(k);

  check(report, !k_useful(y, k).has_value(),
        "no catalyst of dimension " + std::to_string(k) + " (and no " +
            std::to_string(k) + "-copy scheme) helps");
  auto cert = k_useful(y, k + 1);
  check(report, cert.has_value(), "dimension " + std::to_string(k + 1) + " catalysts help");
  auto min_k = min_useful_k(y);
  check(report, min_k && *min_k == k + 1,
        "minimal catalyst dimension (= minimal copy count) is " + std::to_string(k + 1));
  if (min_k) report.values["min_catalyst_dimension"] = std::to_string(*min_k);
  if (cert) report.certificate = std::move(*cert);
  return report;
}

}  // namespace

Report cmd_examples(const std::string& name, unsigned long k_param) {
  if (name == "jp") return examples_jp(env_size_cap());
  if (name == "dk") return examples_dk();
  if (name == "yk") return examples_yk(k_param);
  fail(Errc::parse_error, "unknown example '" + name + "' (expected jp, dk or yk)");
}

Report cmd_oracle(const std::string& suite, const OracleConfig& cfg) {
  Report report;
  report.command = "oracle";
  report.values["suite"] = suite;
  report.values["trials"] = std::to_string(cfg.trials);
  report.values["seed"] = std::to_string(cfg.seed);
  Stopwatch timer;
  std::vector<OracleReport> results;
  if (suite == "all")
    results = run_all_suites(cfg);
  else
    results.push_back(run_oracle_suite(suite, cfg));
  report.timings_us["total"] = timer.us();
  std::uint64_t bad = 0;
  for (const OracleReport& r : results) {
    report.timings_us[r.lemma_id] = r.elapsed.count();
    report.notes.push_back("suite " + r.lemma_id + ": " + std::to_string(r.trials) +
                           " trials, " + std::to_string(r.counterexamples.size()) +
                           " counterexamples");
    for (const std::string& ce : r.counterexamples)
      report.notes.push_back(r.lemma_id + " counterexample -> " + ce);
    bad += r.counterexamples.size();
  }
  report.values["counterexamples"] = std::to_string(bad);
  report.decision = bad == 0 ? Decision::yes : Decision::no;
  return report;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact decision procedures for entanglement catalysis and "
               "multiple-copy transformations"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand too
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a structured JSON report");

  std::string x_file, y_file, c_file;
  std::string lambda_text, alpha_text;
  unsigned long k = 0;
  std::size_t d = 0;
  MajorizeOptions mopts;

  CLI::App* majorize = app.add_subcommand("majorize", "test a majorization relation");
  majorize->add_option("x", x_file, "source vector file")->required();
  majorize->add_option("y", y_file, "target vector file")->required();
  majorize->add_flag("--strict", mopts.strict, "all prefix inequalities strict");
  majorize->add_flag("--super", mopts.super, "suffix-sum (super) relation");
  majorize->add_flag("--strict-super", mopts.strict_super, "strict super relation");
  majorize->add_option("--lambda", lambda_text, "threshold scaling the target (p/q)");

  CLI::App* pmax_cmd = app.add_subcommand("pmax", "maximal conversion probability");
  pmax_cmd->add_option("x", x_file, "source vector file")->required();
  pmax_cmd->add_option("y", y_file, "target vector file")->required();

  CLI::App* cuseful = app.add_subcommand("catalyst-useful",
                                         "is this catalyst useful for this target?");
  cuseful->add_option("y", y_file, "target vector file")->required();
  cuseful->add_option("c", c_file, "catalyst vector file")->required();
  bool cu_prob = false;
  cuseful->add_flag("--prob", cu_prob, "probabilistic regime");

  CLI::App* kuseful = app.add_subcommand("k-useful",
                                         "does any k-dimensional catalyst (or k copies) help?");
  kuseful->add_option("y", y_file, "target vector file")->required();
  kuseful->add_option("--k", k, "catalyst dimension / copy count")->required();
  bool ku_prob = false;
  kuseful->add_flag("--prob", ku_prob, "probabilistic regime");

  CLI::App* mink = app.add_subcommand("min-k", "least useful k, or never");
  mink->add_option("y", y_file, "target vector file")->required();
  bool mk_prob = false;
  mink->add_flag("--prob", mk_prob, "probabilistic regime");

  CLI::App* construct = app.add_subcommand("construct", "build a verified catalyst");
  construct->add_option("y", y_file, "target vector file")->required();
  construct->add_option("--d", d, "split index (2..n-2)")->required();
  construct->add_option("--k", k, "catalyst dimension")->required();

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "block decomposition of a catalyst");
  decompose_cmd->add_option("c", c_file, "catalyst vector file")->required();
  decompose_cmd->add_option("--alpha", alpha_text, "ratio threshold in [0,1)")->required();

  CLI::App* examples = app.add_subcommand("examples", "run a named built-in scenario");
  std::string example_name;
  unsigned long example_k = 3;
  examples->add_option("name", example_name, "jp, dk or yk")->required();
  examples->add_option("--k", example_k, "parameter k for the yk family (default 3)");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "fuzz the underlying lemmas");
  std::string suite = "all";
  OracleConfig cfg;
  oracle_cmd->add_option("--suite", suite, "suite id or 'all'");
  oracle_cmd->add_option("--trials", cfg.trials, "trials per suite");
  oracle_cmd->add_option("--seed", cfg.seed, "base RNG seed");
  oracle_cmd->add_option("--dims", cfg.max_dim, "max sampled dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Report report;
    if (majorize->parsed()) {
      if (!lambda_text.empty()) mopts.lambda = parse_rational(lambda_text);
      report = cmd_majorize(x_file, y_file, mopts);
    } else if (pmax_cmd->parsed()) {
      report = cmd_pmax(x_file, y_file);
    } else if (cuseful->parsed()) {
      report = cmd_catalyst_useful(y_file, c_file, cu_prob);
    } else if (kuseful->parsed()) {
      report = cmd_k_useful(y_file, k, ku_prob);
    } else if (mink->parsed()) {
      report = cmd_min_k(y_file, mk_prob);
    } else if (construct->parsed()) {
      report = cmd_construct(y_file, d, k);
    } else if (decompose_cmd->parsed()) {
      report = cmd_decompose(c_file, parse_rational(alpha_text));
    } else if (examples->parsed()) {
      report = cmd_examples(example_name, example_k);
    } else if (oracle_cmd->parsed()) {
      report = cmd_oracle(suite, cfg);
    } else {
      return 2;
    }
    if (as_json)
      std::cout << to_json(report).dump(2) << "\n";
    else
      std::cout << render_text(report);
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace elocc::cli
