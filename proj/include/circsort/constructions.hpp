#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circsort/numbers.hpp"
#include "circsort/perm.hpp"

namespace circsort {

// ---------------------------------------------------------------------------
// Affine permutations

struct AffineParams {
  int n = 0;
  int a = 1;  // gcd(a, n) = 1
  int b = 0;
};

/// x |-> (a*x + b) mod n. Throws NotCoprime if gcd(a, n) != 1.
Perm affine_perm(const AffineParams& params);

/// Closed-form cycle count of x |-> a*x on Z_n:
/// sum over d | n of phi(d) / ord_d(a).
long long affine_cycle_count(long long a, long long n);

struct TAffResult {
  long long value = 0;      // n - sum over d | n of phi(d) / lambda(d)
  long long witness_a = 1;  // unit attaining the value
};

/// Maximum of t([pi]) over affine pi on Z_n, with a witness multiplier
/// assembled by CRT (a = 3 mod 2^k0, a generates each odd Z_{p^k}^x).
TAffResult t_aff(long long n);

// ---------------------------------------------------------------------------
// Quadratic maps on Z_p

/// x |-> a*x on squares, b*x on non-squares (p odd prime, a,b units).
/// Throws NotABijection unless the induced map is a permutation.
Perm quadratic_map(int a, int b, int p);

/// True iff ab, (a-1)(b-1) and (a+1)(b+1) are all nonzero squares mod p.
bool quadratic_is_scm(int a, int b, int p);

/// All pairs (a, b) with a != b whose quadratic map has t_coset = p - 2.
std::vector<std::pair<int, int>> quadratic_witness_scan(int p);

// ---------------------------------------------------------------------------
// Wreath-product form on Z_m x Z_n

/// A permutation of Z_m x Z_n of the form (x, y) |-> (pi(x), fibers[x](y)).
struct WreathElement {
  int m = 0;
  int n = 0;
  Perm pi;                   // on Z_m
  std::vector<Perm> fibers;  // m permutations on Z_n

  WreathElement(int m_, int n_, Perm pi_, std::vector<Perm> fibers_);
  static WreathElement identity(int m, int n);
};

/// Flatten to a permutation of Z_{mn} via the bijection r + m*t <-> (r, t).
Perm wreath_flatten(const WreathElement& w);

/// Inverse of wreath_flatten where defined: recovers the wreath form iff
/// p maps columns to columns. Throws ModulusMismatch if p.n != m*n.
std::optional<WreathElement> wreath_unflatten(const Perm& p, int m, int n);

/// The column-dependent row offset of the k-th power of the mn-cycle:
/// c^k(x, y) = (x + k, y + w_value(k, m, n, x)).
int w_value(long long k, int m, int n, int x);

/// Wreath element with outer pi_m, fiber 0 equal to pi0_n and all other
/// fibers the identity; t_coset of the flattening is >= n*t(pi_m) + t(pi0_n).
WreathElement construct_product(const Perm& pi_m, const Perm& pi0_n);

/// Parameters of the pq-5 construction.
struct Pq5Config {
  int p = 0, q = 0;
  std::vector<int> exponents;  // e_x over x in Z_p, values in {1, 2}
  long long e = 0;             // sum of the e_x
  long long g = 0;             // generator of Z_q^x
};

/// Wreath element on Z_p x Z_q with t_coset(flatten) >= pq - 5.
/// Requires p >= q >= 3, both prime.
std::pair<Pq5Config, WreathElement> construct_pq5(int p, int q);

/// Witness of the pq-3 construction: every one of the pq shifts of the
/// flattened element has exactly 3 cycles (verified on construction).
struct Pq3Witness {
  int p = 0, q = 0;
  long long a = 0;           // primitive root mod p
  long long g = 0;           // generator of Z_q^x
  std::vector<int> offsets;  // b_x over x in Z_p, values in Z_q
  WreathElement element;
};

/// Requires p, q >= 3 prime and (q-1) | (p-1).
Pq3Witness construct_pq3(int p, int q);

/// Rank over F_q of the circulant A_{i+j,i} = f(j), where f(0) = 0 and
/// f(a^i) = g^{-i} for a, g the smallest primitive roots mod p, q.
/// Requires (q-1) | (p-1) and q < p.
int circulant_rank(int p, int q);

// ---------------------------------------------------------------------------
// Permutation polynomials over Z_n

/// Polynomial with coefficients in Z_n, read as a function on Z_n.
struct PermPoly {
  int n = 0;
  std::vector<long long> coeffs;  // a_0, a_1, ..., trailing zeros allowed

  long long eval(long long x) const;  // Horner, mod n
  int degree() const;                 // index of last nonzero coeff, -1 if zero
};

/// The induced permutation iff the value sequence is a bijection.
std::optional<Perm> poly_is_permutation(const PermPoly& f);

/// Lagrange-style interpolation over Z_p (p prime):
/// f(x) = sum_a pi(a) * (1 - (x - a)^(p-1)), coefficients reduced mod p.
PermPoly poly_interpolate_prime(const Perm& p);

struct PolyWreath {
  PermPoly outer;               // f reduced mod m, on Z_m
  std::vector<PermPoly> fibers; // g_r on Z_n, r = 0..m-1
};

/// Wreath decomposition of a permutation polynomial of Z_{mn}: the induced
/// permutation preserves the column partition, outer/fibers are the induced
/// polynomial maps. Throws NotAPermutationPolynomial.
PolyWreath poly_wreath_decompose(const PermPoly& f, int m, int n);

/// min over permutation-polynomial-induced permutations (degree <= degree_cap,
/// deduplicated by induced function) of max over k of cyc(x |-> f(x+k)).
/// degree_cap < 0 means the default cap n. Throws BudgetExceeded when the
/// candidate count exceeds `budget`.
int c_poly_bruteforce(int n, int degree_cap = -1, long long budget = 100000000);

}  // namespace circsort
