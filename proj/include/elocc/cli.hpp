#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "elocc/oracle.hpp"

namespace elocc::cli {

enum class Decision { useful, not_useful, yes, no, value };

std::string decision_name(Decision d);  // "useful", "not_useful", "true", "false", "value"

/// Everything one command invocation produced. Serializes losslessly to JSON
/// (all rationals as "p/q" strings) and back.
struct Report {
  std::string command;
  std::map<std::string, std::vector<std::string>> inputs;  // echoed vectors
  Decision decision = Decision::value;
  std::optional<UsefulnessCertificate> certificate;
  std::optional<PmaxResult> pmax;
  std::map<std::string, std::string> values;
  std::vector<std::string> notes;
  std::map<std::string, std::int64_t> timings_us;

  // 0 = holds/useful/value, 1 = does-not-hold/not-useful
  int exit_code() const;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
bool operator==(const Report& a, const Report& b);
std::string render_text(const Report& report);

struct MajorizeOptions {
  bool strict = false;
  bool super = false;
  bool strict_super = false;
  std::optional<Rational> lambda;  // scales the target before super comparisons
};

Report cmd_majorize(const std::filesystem::path& x_file,
                    const std::filesystem::path& y_file, const MajorizeOptions& opts);
Report cmd_pmax(const std::filesystem::path& x_file, const std::filesystem::path& y_file);
Report cmd_catalyst_useful(const std::filesystem::path& y_file,
                           const std::filesystem::path& c_file, bool prob);
Report cmd_k_useful(const std::filesystem::path& y_file, unsigned long k, bool prob);
Report cmd_min_k(const std::filesystem::path& y_file, bool prob);
Report cmd_construct(const std::filesystem::path& y_file, std::size_t d, unsigned long k);
Report cmd_decompose(const std::filesystem::path& c_file, const Rational& alpha);
Report cmd_examples(const std::string& name, unsigned long k_param);
Report cmd_oracle(const std::string& suite, const OracleConfig& cfg);

// Full argv entry point: parses, dispatches, prints (text or --json).
// Exit codes: 0 holds/useful/pass, 1 not, 2 usage or input error.
int run_cli(int argc, const char* const* argv);

}  // namespace elocc::cli
