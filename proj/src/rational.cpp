#include "strip/rational.hpp"

#include <cctype>

namespace strip {
namespace {

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error("malformed rational '" + std::string(whole) + "'");
  size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), text);
    BigInt den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(ParseInteger(digits, text), den);
  }
  return Rational(ParseInteger(text, text));
}

std::string ToString(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

int64_t FloorToInt(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q.convert_to<int64_t>();
}

int64_t CeilToInt(const Rational& value) { return -FloorToInt(-value); }

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

}  // namespace strip
