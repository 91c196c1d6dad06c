#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyomino {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, k), zero whenever k < 0, k > n or n < 0.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

inline BigCount power(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) {
    throw std::domain_error("power: negative exponent");
  }
  BigCount result = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

inline BigCount exact_half(const BigCount& value) {
  if ((value & 1) != 0) {
    throw std::logic_error("exact_half: odd numerator " + value.str());
  }
  return value >> 1;
}

inline BigCount exact_div(const BigCount& value, const BigCount& divisor) {
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: " + value.str() + " not divisible by " + divisor.str());
  }
  return quotient;
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace polyomino
