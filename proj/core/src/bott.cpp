#include "conehodge/bott.hpp"

#include <string>

namespace conehodge {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t t = 0; t < k; ++t) {
    num *= BigInt(n - t);
    den *= BigInt(t + 1);
  }
  // Falling factorial over k! is always integral.
  return num / den;
}

std::int64_t bott_dimension(int n, int p, int q, std::int64_t k) {
  if (n < 0) throw error("bott_dimension: n must be >= 0");
  if (p < 0 || p > n || q < 0 || q > n) {
    throw error("bott_dimension: (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                ") out of range for n = " + std::to_string(n));
  }
  if (q == 0 && k > p) {
    return to_int64(binomial(k + n - p, k) * binomial(k - 1, p));
  }
  if (q == p && k == 0) return 1;
  if (q == n && k < p - n) {
    return to_int64(binomial(-k + p, -k) * binomial(-k - 1, n - p));
  }
  return 0;
}

}  // namespace conehodge
