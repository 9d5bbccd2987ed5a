#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hoq {

/// Exact rational coefficient type. All Hamiltonians built here have small
/// integer or dyadic coefficients, so a 64-bit backed rational is plenty.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Canonical "p/q" form, e.g. "4/1", "-3/2".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    const std::int64_t num = std::stoll(s.substr(0, slash));
    const std::int64_t den = std::stoll(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const boost::bad_rational&) {
    throw std::invalid_argument("zero denominator in rational: " + s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace hoq
