#include "circsort/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace circsort {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(
      static_cast<__int128>(a) * b % m);
}

long long powmod(long long a, long long e, long long m) {
  if (m == 1) return 0;
  long long r = 1;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

long long modinv(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a0 = ((a % m) + m) % m;
  long long b = a0;
  // extended gcd on (b, g)
  while (b != 0) {
    long long q = g / b;
    g -= q * b;
    std::swap(g, b);
    x -= q * x1;
    std::swap(x, x1);
  }
  if (g != 1)
    throw NotCoprime("no inverse of " + std::to_string(a0) + " mod " +
                     std::to_string(m));
  return ((x % m) + m) % m;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
    if (n % d == 0) return n == d;
  }
  for (long long d = 17; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> fac;
  for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

namespace {

long long lambda_prime_power(long long p, int k) {
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  long long phi = pk / p * (p - 1);
  if (p == 2 && k >= 3) return phi / 2;
  return phi;
}

}  // namespace

TotientData totients(long long n) {
  if (n < 1) throw EmptyInput("totients: n must be >= 1");
  TotientData td;
  td.n = n;
  td.phi = 1;
  td.lambda = 1;
  auto fac = factorize(n);
  td.divisors = {1};
  for (auto [p, k] : fac) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    td.phi *= pk / p * (p - 1);
    td.lambda = lcm_ll(td.lambda, lambda_prime_power(p, k));
    // extend divisor list by powers of p
    const size_t base = td.divisors.size();
    long long pe = 1;
    for (int e = 1; e <= k; ++e) {
      pe *= p;
      for (size_t i = 0; i < base; ++i) td.divisors.push_back(td.divisors[i] * pe);
    }
  }
  std::sort(td.divisors.begin(), td.divisors.end());
  return td;
}

long long mult_order(long long a, long long d) {
  if (d < 1) throw EmptyInput("mult_order: d must be >= 1");
  if (d == 1) return 1;
  a = ((a % d) + d) % d;
  if (gcd_ll(a, d) != 1)
    throw NotCoprime("mult_order: gcd(" + std::to_string(a) + ", " +
                     std::to_string(d) + ") != 1");
  // order divides lambda(d); scan divisors of lambda in ascending order
  long long lam = totients(d).lambda;
  std::vector<long long> divs;
  for (long long e = 1; e * e <= lam; ++e) {
    if (lam % e == 0) {
      divs.push_back(e);
      divs.push_back(lam / e);
    }
  }
  std::sort(divs.begin(), divs.end());
  for (long long e : divs)
    if (powmod(a, e, d) == 1) return e;
  throw Error("mult_order: internal inconsistency");
}

long long primitive_root(long long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, _] : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("primitive_root: none found (impossible for prime p)");
}

}  // namespace circsort
