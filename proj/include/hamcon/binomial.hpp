#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamcon {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) with the total convention: 0 whenever k < 0, k > n or n < 0.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace hamcon
