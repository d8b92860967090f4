#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "wreathvote/errors.hpp"

namespace wreathvote {

// All scores, characters and matrix entries are exact rationals. There is
// no floating point anywhere in the computational core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;  // "p/q", or "p" when the denominator is 1
  return os.str();
}

inline std::string to_string(const BigInt& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) throw DomainError("empty rational literal");
  std::string s = text.substr(a, b - a + 1);

  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!check_int(s)) throw DomainError("bad rational literal: '" + text + "'");
      return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
      throw DomainError("bad rational literal: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(BigInt(num), d);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("bad rational literal: '" + text + "'");
  }
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace wreathvote
