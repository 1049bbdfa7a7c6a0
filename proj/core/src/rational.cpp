#include "bmenet/rational.hpp"

#include <cctype>

#include "bmenet/error.hpp"

namespace bmenet {

Int pow2(unsigned exponent) { return Int(1) << exponent; }

Int factorial(unsigned m) {
  Int result = 1;
  for (unsigned i = 2; i <= m; ++i) result *= i;
  return result;
}

Int double_factorial(int m) {
  Int result = 1;
  for (int i = m; i >= 2; i -= 2) result *= i;
  return result;
}

Int binomial(unsigned m, unsigned r) {
  if (r > m) return 0;
  if (r > m - r) r = m - r;
  Int result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;  // exact at every step
  }
  return result;
}

namespace {

Int parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty())
    fail(ErrorCode::MalformedFile, "empty number in '" + std::string(original) + "'");
  Int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorCode::MalformedFile, "bad number '" + std::string(original) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::MalformedFile, "empty number");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int num = parse_digits(text.substr(0, slash), original);
    Int den = parse_digits(text.substr(slash + 1), original);
    if (den == 0) fail(ErrorCode::MalformedFile, "zero denominator in '" + std::string(original) + "'");
    Rational value(num, den);
    return negative ? -value : value;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail(ErrorCode::MalformedFile, "bad number '" + std::string(original) + "'");
    Int num = whole.empty() ? Int(0) : parse_digits(whole, original);
    Int den = 1;
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorCode::MalformedFile, "bad number '" + std::string(original) + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational value(num, den);
    return negative ? -value : value;
  }

  Rational value(parse_digits(text, original));
  return negative ? -value : value;
}

std::string rational_to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // A finite decimal exists exactly when den = 2^a * 5^b.
  Int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  unsigned digits = std::max(twos, fives);
  Int scaled = abs(num);
  for (unsigned i = twos; i < digits; ++i) scaled *= 2;
  for (unsigned i = fives; i < digits; ++i) scaled *= 5;
  std::string raw = scaled.str();
  if (raw.size() <= digits) raw.insert(0, digits + 1 - raw.size(), '0');
  std::string whole = raw.substr(0, raw.size() - digits);
  std::string frac = raw.substr(raw.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (num < 0 ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace bmenet
