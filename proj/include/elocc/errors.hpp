#pragma once

#include <stdexcept>
#include <string>

namespace elocc {

// Every failure mode raised by the library. CLI maps any of these to exit 2.
enum class Errc {
  negative_component,
  empty_vector,
  all_zero,
  index_out_of_range,
  total_mismatch,
  size_cap_exceeded,
  zero_component,
  dimension_one,
  alpha_out_of_range,
  empty_kd,
  dimension_too_small,
  no_certificate,
  interval_empty,
  uniform_catalyst,
  uniform_target,
  infeasible_witness,
  target_is_zero_vector,
  parse_error,
  unknown_suite,
  precondition_violated,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace elocc
