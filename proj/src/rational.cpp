#include "covspec/rational.hpp"

#include <cctype>
#include <cstdio>

#include "covspec/errors.hpp"

namespace covspec {

Rational parse_rational(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw ValidationError("empty rational literal");
  const auto slash = cleaned.find('/');
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  const std::string_view all(cleaned);
  const std::string_view num = all.substr(0, slash);
  const std::string_view den = slash == std::string::npos ? std::string_view("1") : all.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer numerator(n);
  Integer denominator{std::string(den)};
  if (denominator == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_decimal(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  return buffer;
}

}  // namespace covspec
