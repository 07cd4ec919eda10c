#include "isoform/rational.hpp"

#include <limits>

namespace isoform {

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw Error("Rational::parse: empty string");
  auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw Error("Rational::parse: empty integer field");
    bool negative = false;
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
      negative = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw Error("Rational::parse: sign without digits");
    for (std::size_t k = i; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9')
        throw Error("Rational::parse: invalid character in '" + std::string(t) + "'");
    }
    BigInt magnitude{std::string(t.substr(i))};
    return negative ? BigInt(-magnitude) : magnitude;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  return Rational(num, den);
}

long long Rational::as_int64() const {
  if (!is_integer()) throw Error("Rational::as_int64: not an integer: " + str());
  BigInt n = numerator();
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw Error("Rational::as_int64: out of range: " + str());
  return static_cast<long long>(n);
}

}  // namespace isoform
