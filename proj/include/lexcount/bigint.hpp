#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexcount {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace lexcount
