#include "elocc/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "elocc/errors.hpp"

namespace elocc {

Rational make_rational(long num, long den) {
  if (den == 0) fail(Errc::parse_error, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(Errc::parse_error, "empty rational token '" + std::string(text) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Errc::parse_error, "bad rational token '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    value = Rational(n, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail(Errc::parse_error, "bad decimal token '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      fail(Errc::parse_error, "bad decimal token '" + std::string(text) + "'");
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(digits, den);
    value.canonicalize();
  } else {
    if (!all_digits(s)) fail(Errc::parse_error, "bad integer token '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(s), 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_rational(const Rational& q) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(q));
  std::ostringstream out;
  out << q << " (" << buf << ")";
  return out.str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // gcd(p,q)=1 implies gcd(p^e,q^e)=1, so the result is already canonical
  return out;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::negative_component: return "NegativeComponent";
    case Errc::empty_vector: return "EmptyVector";
    case Errc::all_zero: return "AllZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::total_mismatch: return "TotalMismatch";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::zero_component: return "ZeroComponent";
    case Errc::dimension_one: return "Dimension1";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::empty_kd: return "EmptyKd";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::no_certificate: return "NoCertificate";
    case Errc::interval_empty: return "IntervalEmpty";
    case Errc::uniform_catalyst: return "UniformCatalyst";
    case Errc::uniform_target: return "UniformTarget";
    case Errc::infeasible_witness: return "InfeasibleWitness";
    case Errc::target_is_zero_vector: return "TargetIsZeroVector";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::precondition_violated: return "PreconditionViolated";
  }
  return "UnknownError";
}

}  // namespace elocc
