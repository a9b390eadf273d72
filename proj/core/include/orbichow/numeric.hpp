#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// reduced rationals. No floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbichow {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

/// Renders "p/q" in lowest terms, or just "p" when q == 1.
inline std::string to_string(const Rational& q) {
  std::string s = rational_num(q).str();
  if (!is_integer(q)) {
    s += "/";
    s += rational_den(q).str();
  }
  return s;
}

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on bad input.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(text)));
    }
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot parse rational: " + std::string(text));
  }
}

/// Euclidean remainder in [0, m), m > 0.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

/// FNV-1a, used for content-addressed table/cache keys.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace orbichow
