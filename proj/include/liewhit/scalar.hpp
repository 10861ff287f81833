#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liewhit {

/// Exact rational scalar. All coefficient arithmetic in the library runs
/// over these; there is no floating point anywhere.
///
/// cpp_rational keeps the canonical form we rely on: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Raised on malformed user input (bad flags, bad files, bad expressions).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation leaves the finite window of a truncated
/// algebra under the reject-overflow policy.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated; callers map it to a
/// distinct exit code so it is never confused with a mathematical "no".
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Build num/den without trusting the two-argument cpp_rational
/// constructor (strict about canonical form in some Boost versions).
inline Rational rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw usage_error("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational rat(long long num, long long den = 1) {
  return rat(BigInt(num), BigInt(den));
}

/// Parses "n" or "n/d" with optional sign; anything else is a usage error.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return usage_error("bad rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

/// Prints num/den, omitting the denominator when it is 1.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace liewhit
