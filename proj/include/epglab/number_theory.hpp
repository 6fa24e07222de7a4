#pragma once

#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

namespace epglab {

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<int, int>> factorize(long long n) {
  std::vector<std::pair<int, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(static_cast<int>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<int>(n), 1);
  return out;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Largest power of p dividing n.
inline long long prime_part(long long n, long long p) {
  long long out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

/// p-adic valuation.
inline int valuation(long long n, long long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
inline long long mod_inverse(long long a, long long m) {
  if (m == 1) return 0;
  long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    const long long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace epglab
