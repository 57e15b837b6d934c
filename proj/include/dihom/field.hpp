#pragma once

// Exact scalars. All linear algebra is templated on a small field object that
// carries the arithmetic. Two instances: arbitrary-precision rationals and
// Z/p for a runtime prime p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dihom {

struct RationalField {
  using elem = boost::multiprecision::cpp_rational;

  static const char* name() { return "rational"; }
  elem zero() const { return elem(0); }
  elem one() const { return elem(1); }
  elem from_int(long long n) const { return elem(n); }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem neg(const elem& a) const { return -a; }
  elem inv(const elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return elem(1) / a;
  }
  bool is_zero(const elem& a) const { return a == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  std::string num_str(const elem& a) const {
    return boost::multiprecision::numerator(a).convert_to<std::string>();
  }
  std::string den_str(const elem& a) const {
    return boost::multiprecision::denominator(a).convert_to<std::string>();
  }
  std::string str(const elem& a) const {
    return denominator(a) == 1 ? num_str(a) : num_str(a) + "/" + den_str(a);
  }
};

// Z/p with canonical representatives in [0, p). p must be prime; inverses use
// Fermat. Fits products in __int128, so p may be any prime below 2^62.
struct PrimeField {
  using elem = std::int64_t;
  std::int64_t p;

  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  }
  std::string name() const { return "fp:" + std::to_string(p); }
  elem zero() const { return 0; }
  elem one() const { return p == 1 ? 0 : 1; }
  elem from_int(long long n) const {
    elem r = static_cast<elem>(n % p);
    return r < 0 ? r + p : r;
  }
  elem add(elem a, elem b) const {
    elem r = a + b;
    return r >= p ? r - p : r;
  }
  elem sub(elem a, elem b) const {
    elem r = a - b;
    return r < 0 ? r + p : r;
  }
  elem mul(elem a, elem b) const {
    return static_cast<elem>(static_cast<__int128>(a) * b % p);
  }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    elem r = one(), base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }
  std::string num_str(elem a) const { return std::to_string(a); }
  std::string den_str(elem) const { return "1"; }
  std::string str(elem a) const { return std::to_string(a); }
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace dihom
