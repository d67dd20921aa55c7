#pragma once

#include <cstdint>
#include <vector>

#include "circsort/errors.hpp"

namespace circsort {

/// Euler phi, Carmichael lambda and the divisor list of n, computed by
/// trial-division factorization.
struct TotientData {
  long long n = 0;
  long long phi = 0;
  long long lambda = 0;
  std::vector<long long> divisors;  // sorted ascending
};

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// (a * b) mod m without overflow for m < 2^62.
long long mulmod(long long a, long long b, long long m);
long long powmod(long long a, long long e, long long m);

/// Modular inverse of a mod m; throws NotCoprime if gcd(a, m) != 1.
long long modinv(long long a, long long m);

bool is_prime(long long n);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

TotientData totients(long long n);

/// Least l >= 1 with a^l = 1 (mod d); ord_1(a) = 1.
long long mult_order(long long a, long long d);

/// Smallest positive generator of Z_p^x. Throws NotPrime.
long long primitive_root(long long p);

}  // namespace circsort
