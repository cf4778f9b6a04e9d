#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace strip {

// Exact arbitrary-precision rational. All classification thresholds and
// certificate bounds are evaluated with it; geometry itself is int64.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a configured state or search cap is exceeded. Never carries a
// wrong answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Parses "p/q", "p" or a finite decimal such as "0.45".
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& value);

int64_t FloorToInt(const Rational& value);
int64_t CeilToInt(const Rational& value);
double ToDouble(const Rational& value);

inline Rational R(int64_t num, int64_t den = 1) { return Rational(num, den); }

}  // namespace strip
