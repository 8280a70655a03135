#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arithlab {

using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<BigInt>;

/// Raised when an input violates a documented precondition.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigInt abs(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline BigInt lcm(const BigInt &a, const BigInt &b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// gcd of all entries; 0 for an empty or all-zero vector.
inline BigInt gcd(const Vec &v) {
  BigInt g = 0;
  for (const auto &x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

inline bool all_positive(const Vec &v) {
  for (const auto &x : v)
    if (x <= 0) return false;
  return true;
}

inline BigInt sum(const Vec &v) {
  BigInt s = 0;
  for (const auto &x : v) s += x;
  return s;
}

inline Vec make_vec(std::initializer_list<long long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline Vec constant_vec(std::size_t n, long long value) {
  return Vec(n, BigInt(value));
}

inline BigInt parse_bigint(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  std::size_t j = s.size();
  while (j > i && (s[j - 1] == ' ' || s[j - 1] == '\t' || s[j - 1] == '\r')) --j;
  std::string_view t = s.substr(i, j - i);
  std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (k == t.size()) throw DomainError("expected an integer, got '" + std::string(s) + "'");
  for (std::size_t p = k; p < t.size(); ++p)
    if (t[p] < '0' || t[p] > '9')
      throw DomainError("expected an integer, got '" + std::string(s) + "'");
  return BigInt(std::string(t[0] == '+' ? t.substr(1) : t));
}

inline std::string to_string(const BigInt &x) { return x.str(); }

inline std::string join(const Vec &v, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

/// Parses "1,2,3" (commas and/or whitespace as separators).
inline Vec parse_vec(std::string_view s) {
  Vec out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(parse_bigint(cur));
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

} // namespace arithlab
