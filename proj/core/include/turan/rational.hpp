#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

/// Exact arithmetic for every density, bound and threshold the engine reports.
/// All quantities in scope fit comfortably in 64 bits.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "P/Q" or a plain integer "P".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(std::stoll(std::string(text)), 1);
    }
    long long num = std::stoll(std::string(text.substr(0, slash)));
    long long den = std::stoll(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const boost::bad_rational&) {
    throw std::invalid_argument("invalid rational: " + std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational: " + std::string(text));
  }
}

/// Exact binomial coefficient; throws on 64-bit overflow.
inline long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      throw std::overflow_error("binomial overflow");
  }
  return static_cast<long long>(acc);
}

}  // namespace turan
