#include "circsort/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace circsort {

// ---------------------------------------------------------------------------
// Affine

Perm affine_perm(const AffineParams& params) {
  const int n = params.n;
  if (n < 1) throw EmptyInput("affine_perm: n must be >= 1");
  if (gcd_ll(params.a, n) != 1)
    throw NotCoprime("affine_perm: gcd(a, n) != 1");
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) {
    long long v = (static_cast<long long>(params.a) * x + params.b) % n;
    img[x] = static_cast<int>((v + n) % n);
  }
  return Perm::make(std::move(img));
}

long long affine_cycle_count(long long a, long long n) {
  if (n < 1) throw EmptyInput("affine_cycle_count: n must be >= 1");
  if (gcd_ll(a, n) != 1)
    throw NotCoprime("affine_cycle_count: gcd(a, n) != 1");
  long long total = 0;
  for (long long d : totients(n).divisors)
    total += totients(d).phi / mult_order(a, d);
  return total;
}

namespace {

/// Smallest generator of the (cyclic) group Z_{p^k}^x for odd prime p.
long long prime_power_generator(long long p, int k) {
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  const long long phi = pk / p * (p - 1);
  for (long long g = 2; g < pk; ++g) {
    if (gcd_ll(g, pk) != 1) continue;
    if (mult_order(g, pk) == phi) return g;
  }
  throw Error("prime_power_generator: none found");
}

/// CRT combine: x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1.
long long crt_pair(long long r1, long long m1, long long r2, long long m2) {
  if (m1 == 1) return r2 % m2;
  if (m2 == 1) return r1 % m1;
  const long long inv = modinv(m1 % m2, m2);
  const long long k = mulmod(((r2 - r1) % m2 + m2) % m2, inv, m2);
  return r1 + m1 * k;
}

}  // namespace

TAffResult t_aff(long long n) {
  if (n < 1) throw EmptyInput("t_aff: n must be >= 1");
  TAffResult res;
  long long sum = 0;
  for (long long d : totients(n).divisors) {
    const TotientData td = totients(d);
    sum += td.phi / td.lambda;
  }
  res.value = n - sum;

  // witness: a = 3 mod 2^k0, a generates each odd Z_{p^k}^x
  long long a = 0, mod = 1;
  for (auto [p, k] : factorize(n)) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    const long long target = (p == 2) ? (3 % pk) : prime_power_generator(p, k);
    a = crt_pair(a, mod, target, pk);
    mod *= pk;
  }
  if (n == 1) a = 0;
  res.witness_a = (a % n + n) % n;
  if (n == 1) res.witness_a = 0;  // only unit of Z_1
  if (n > 1 && n - affine_cycle_count(res.witness_a, n) != res.value)
    throw Error("t_aff: witness does not attain the formula value");
  return res;
}

// ---------------------------------------------------------------------------
// Quadratic maps

namespace {

std::vector<char> square_indicator(int p) {
  std::vector<char> sq(p, 0);
  for (long long y = 0; y < p; ++y) sq[(y * y) % p] = 1;
  return sq;
}

void require_odd_prime_units(int a, int b, int p, const char* who) {
  if (!is_prime(p) || p == 2)
    throw NotPrime(std::string(who) + ": p must be an odd prime");
  if (a % p == 0 || b % p == 0)
    throw NotCoprime(std::string(who) + ": a, b must be units mod p");
}

}  // namespace

Perm quadratic_map(int a, int b, int p) {
  require_odd_prime_units(a, b, p, "quadratic_map");
  const auto sq = square_indicator(p);
  std::vector<int> img(p);
  for (int x = 0; x < p; ++x) {
    const long long c = sq[x] ? a : b;
    img[x] = static_cast<int>(((c * x) % p + p) % p);
  }
  return Perm::make(std::move(img));  // throws NotABijection when ab non-square
}

bool quadratic_is_scm(int a, int b, int p) {
  require_odd_prime_units(a, b, p, "quadratic_is_scm");
  const auto sq = square_indicator(p);
  auto nonzero_square = [&](long long v) {
    v = ((v % p) + p) % p;
    return v != 0 && sq[v];
  };
  return nonzero_square(static_cast<long long>(a) * b) &&
         nonzero_square(static_cast<long long>(a - 1) * (b - 1)) &&
         nonzero_square(static_cast<long long>(a + 1) * (b + 1));
}

std::vector<std::pair<int, int>> quadratic_witness_scan(int p) {
  if (!is_prime(p) || p == 2)
    throw NotPrime("quadratic_witness_scan: p must be an odd prime");
  std::vector<std::pair<int, int>> hits;
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if (a == b) continue;
      if (!quadratic_is_scm(a, b, p)) continue;  // necessary by Prop 2.6
      const Perm pi = quadratic_map(a, b, p);
      if (t_coset(pi) == p - 2) hits.emplace_back(a, b);
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Wreath form

WreathElement::WreathElement(int m_, int n_, Perm pi_, std::vector<Perm> fibers_)
    : m(m_), n(n_), pi(std::move(pi_)), fibers(std::move(fibers_)) {
  if (m < 1 || n < 1) throw EmptyInput("WreathElement: m, n must be >= 1");
  if (pi.n() != m)
    throw ModulusMismatch("WreathElement: outer permutation modulus != m");
  if (static_cast<int>(fibers.size()) != m)
    throw ModulusMismatch("WreathElement: need exactly m fibers");
  for (const Perm& f : fibers)
    if (f.n() != n)
      throw ModulusMismatch("WreathElement: fiber modulus != n");
}

WreathElement WreathElement::identity(int m, int n) {
  return WreathElement(m, n, Perm::identity(m),
                       std::vector<Perm>(m, Perm::identity(n)));
}

Perm wreath_flatten(const WreathElement& w) {
  std::vector<int> img(static_cast<size_t>(w.m) * w.n);
  for (int r = 0; r < w.m; ++r) {
    for (int t = 0; t < w.n; ++t) {
      img[r + static_cast<size_t>(w.m) * t] = w.pi(r) + w.m * w.fibers[r](t);
    }
  }
  return Perm::make(std::move(img));
}

std::optional<WreathElement> wreath_unflatten(const Perm& p, int m, int n) {
  if (p.n() != m * n)
    throw ModulusMismatch("wreath_unflatten: p.n != m*n");
  std::vector<int> outer(m);
  std::vector<Perm> fibers;
  fibers.reserve(m);
  for (int r = 0; r < m; ++r) {
    const int col = p(r) % m;
    std::vector<int> fib(n);
    for (int t = 0; t < n; ++t) {
      const int v = p(r + m * t);
      if (v % m != col) return std::nullopt;  // column not preserved
      fib[t] = v / m;
    }
    outer[r] = col;
    fibers.push_back(Perm::make(std::move(fib)));
  }
  return WreathElement(m, n, Perm::make(std::move(outer)), std::move(fibers));
}

int w_value(long long k, int m, int n, int x) {
  const long long mn = static_cast<long long>(m) * n;
  k = ((k % mn) + mn) % mn;
  const int r = static_cast<int>(k % m);
  const long long t = k / m;
  const int xm = ((x % m) + m) % m;
  const long long val = (xm <= m - 1 - r) ? t : t + 1;
  return static_cast<int>(val % n);
}

WreathElement construct_product(const Perm& pi_m, const Perm& pi0_n) {
  const int m = pi_m.n(), n = pi0_n.n();
  if (m < 2 || n < 2)
    throw PreconditionViolated("construct_product: m, n must be >= 2");
  std::vector<Perm> fibers(m, Perm::identity(n));
  fibers[0] = pi0_n;
  return WreathElement(m, n, pi_m, std::move(fibers));
}

std::pair<Pq5Config, WreathElement> construct_pq5(int p, int q) {
  if (!is_prime(p) || !is_prime(q))
    throw NotPrime("construct_pq5: p and q must be prime");
  if (q < 3 || p < q)
    throw PreconditionViolated("construct_pq5: need p >= q >= 3");

  Pq5Config cfg;
  cfg.p = p;
  cfg.q = q;
  cfg.g = primitive_root(q);

  // a in [0, p] with a = 2p - 3 mod (q - 1)
  long long a = ((2LL * p - 3) % (q - 1) + (q - 1)) % (q - 1);
  cfg.exponents.assign(p, 2);
  for (long long x = 0; x < a; ++x) cfg.exponents[x] = 1;
  cfg.e = 0;
  for (int ex : cfg.exponents) cfg.e += ex;

  // outer: affine primitive-root multiplier, every shift of type (1, p-1)
  const Perm outer = affine_perm({p, static_cast<int>(primitive_root(p)), 0});
  std::vector<Perm> fibers;
  fibers.reserve(p);
  for (int x = 0; x < p; ++x) {
    const long long mult = powmod(cfg.g, cfg.exponents[x], q);
    fibers.push_back(affine_perm({q, static_cast<int>(mult), 0}));
  }
  return {cfg, WreathElement(p, q, outer, std::move(fibers))};
}

namespace {

/// One forbidden-hyperplane constraint over F_q: coeffs . b != rhs.
struct AffineConstraint {
  std::vector<long long> coeffs;  // length p
  long long rhs = 0;
};

/// Deterministic DFS for b in F_q^p avoiding every constraint hyperplane.
/// Coordinates are assigned in ascending order with ascending values; a
/// constraint whose variables are all assigned must evaluate != rhs.
bool solve_avoiding(const std::vector<AffineConstraint>& cons, int q,
                    std::vector<int>& b, size_t idx) {
  const size_t p = b.size();
  if (idx == p) return true;
  for (int v = 0; v < q; ++v) {
    b[idx] = v;
    bool feasible = true;
    for (const auto& c : cons) {
      // find the largest index with nonzero coefficient
      size_t last = p;
      for (size_t j = p; j-- > 0;) {
        if (c.coeffs[j] % q != 0) {
          last = j;
          break;
        }
      }
      if (last == p || last > idx) continue;  // not yet fully determined
      long long acc = 0;
      for (size_t j = 0; j <= last; ++j)
        acc = (acc + c.coeffs[j] * b[j]) % q;
      if (acc == ((c.rhs % q) + q) % q) {
        feasible = false;
        break;
      }
    }
    if (feasible && solve_avoiding(cons, q, b, idx + 1)) return true;
  }
  b[idx] = 0;
  return false;
}

}  // namespace

Pq3Witness construct_pq3(int p, int q) {
  if (!is_prime(p) || !is_prime(q))
    throw NotPrime("construct_pq3: p and q must be prime");
  if (p < 3 || q < 3)
    throw PreconditionViolated("construct_pq3: need p, q >= 3");
  if ((p - 1) % (q - 1) != 0)
    throw DivisibilityViolated("construct_pq3: (q-1) must divide (p-1)");

  const long long a = primitive_root(p);
  const long long g = primitive_root(q);
  const long long inv_one_minus_a = modinv(((1 - a) % p + p) % p, p);

  // For each shift residue r, simulate the fiber composition along the long
  // cycle of x |-> a(x+r) symbolically in the offsets b: the composed map is
  // y |-> y + (coeffs . b - rhs), and we need that offset nonzero.
  std::vector<AffineConstraint> cons;
  cons.reserve(p);
  for (int r = 0; r < p; ++r) {
    const long long d = mulmod(mulmod(r, a, p), inv_one_minus_a, p);
    AffineConstraint c;
    c.coeffs.assign(p, 0);
    long long scalar = 0;  // constant part of the accumulated offset
    // columns of the long cycle in application order: a^1+d, a^2+d, ...
    long long apow = 1;
    std::vector<long long> cols(p - 1);
    for (int i = 1; i <= p - 1; ++i) {
      apow = mulmod(apow, a, p);
      cols[i - 1] = (apow + d) % p;
    }
    // compose y |-> g*(y + w_r(x_i)) + b_{x_i + r} in application order
    for (int i = 0; i < p - 1; ++i) {
      const long long x = cols[i];
      const long long w = w_value(r, p, q, static_cast<int>(x));
      // new_offset = g * old_offset + (g*w + b_{x+r})
      scalar = (mulmod(g, scalar, q) + mulmod(g, w, q)) % q;
      for (auto& cc : c.coeffs) cc = mulmod(g, cc, q);
      c.coeffs[(x + r) % p] = (c.coeffs[(x + r) % p] + 1) % q;
    }
    // offset(b) = coeffs . b + scalar; forbid offset == 0
    c.rhs = ((-scalar) % q + q) % q;
    cons.push_back(std::move(c));
  }

  std::vector<int> b(p, 0);
  if (!solve_avoiding(cons, q, b, 0))
    throw SolverFailed("construct_pq3: no offset vector found");

  const Perm outer = affine_perm({p, static_cast<int>(a), 0});
  std::vector<Perm> fibers;
  fibers.reserve(p);
  for (int x = 0; x < p; ++x) {
    std::vector<int> fib(q);
    for (int y = 0; y < q; ++y)
      fib[y] = static_cast<int>((mulmod(g, y, q) + b[x]) % q);
    fibers.push_back(Perm::make(std::move(fib)));
  }
  WreathElement elem(p, q, outer, std::move(fibers));

  // verify: every one of the pq shifts has exactly 3 cycles
  const Perm flat = wreath_flatten(elem);
  const long long pq = static_cast<long long>(p) * q;
  for (long long k = 0; k < pq; ++k) {
    if (cycle_count(shift(flat, k)) != 3)
      throw SolverFailed("construct_pq3: verification failed at shift " +
                         std::to_string(k));
  }
  return Pq3Witness{p, q, a, g, std::move(b), std::move(elem)};
}

int circulant_rank(int p, int q) {
  if (!is_prime(p) || !is_prime(q))
    throw NotPrime("circulant_rank: p and q must be prime");
  if (q >= p || (p - 1) % (q - 1) != 0)
    throw DivisibilityViolated("circulant_rank: need q < p and (q-1) | (p-1)");
  const long long a = primitive_root(p);
  const long long g = primitive_root(q);
  const long long ginv = modinv(g, q);

  // f(0) = 0, f(a^i) = g^{-i}
  std::vector<long long> f(p, 0);
  long long apow = 1, gpow = 1;
  for (int i = 1; i <= p - 1; ++i) {
    apow = mulmod(apow, a, p);
    gpow = mulmod(gpow, ginv, q);
    f[apow] = gpow;
  }

  // A[i+j][i] = f(j), i.e. A[row][col] = f(row - col)
  std::vector<std::vector<long long>> A(p, std::vector<long long>(p));
  for (int row = 0; row < p; ++row)
    for (int col = 0; col < p; ++col)
      A[row][col] = f[((row - col) % p + p) % p];

  // row reduction over F_q
  int rank = 0;
  for (int col = 0; col < p && rank < p; ++col) {
    int pivot = -1;
    for (int row = rank; row < p; ++row) {
      if (A[row][col] % q != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(A[rank], A[pivot]);
    const long long inv = modinv(A[rank][col], q);
    for (long long& v : A[rank]) v = mulmod(v, inv, q);
    for (int row = 0; row < p; ++row) {
      if (row == rank || A[row][col] % q == 0) continue;
      const long long factor = A[row][col] % q;
      for (int j = 0; j < p; ++j)
        A[row][j] = ((A[row][j] - factor * A[rank][j]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Permutation polynomials

long long PermPoly::eval(long long x) const {
  long long acc = 0;
  x = ((x % n) + n) % n;
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = (mulmod(acc, x, n) + ((coeffs[i] % n) + n) % n) % n;
  return acc;
}

int PermPoly::degree() const {
  for (size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] % n != 0) return static_cast<int>(i);
  return -1;
}

std::optional<Perm> poly_is_permutation(const PermPoly& f) {
  if (f.n < 1) throw EmptyInput("poly_is_permutation: n must be >= 1");
  std::vector<int> img(f.n);
  std::vector<char> seen(f.n, 0);
  for (int x = 0; x < f.n; ++x) {
    const int v = static_cast<int>(f.eval(x));
    if (seen[v]) return std::nullopt;
    seen[v] = 1;
    img[x] = v;
  }
  return Perm::make(std::move(img));
}

namespace {

/// Pascal's triangle mod m, rows 0..rows-1.
std::vector<std::vector<long long>> binomials_mod(int rows, long long m) {
  std::vector<std::vector<long long>> C(rows);
  for (int i = 0; i < rows; ++i) {
    C[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) C[i][j] = (C[i - 1][j - 1] + C[i - 1][j]) % m;
  }
  return C;
}

}  // namespace

PermPoly poly_interpolate_prime(const Perm& p) {
  const int n = p.n();
  if (!is_prime(n)) throw NotPrime("poly_interpolate_prime: modulus not prime");
  const auto C = binomials_mod(n, n);
  std::vector<long long> coeffs(n, 0);
  for (int a = 0; a < n; ++a) {
    const long long pa = p(a);
    // pi(a) * (1 - (x - a)^(n-1))
    coeffs[0] = (coeffs[0] + pa) % n;
    long long neg_a_pow = 1;  // (-a)^(n-1-j), built from the top
    // expand (x-a)^(n-1) = sum_j C(n-1,j) x^j (-a)^(n-1-j)
    std::vector<long long> pw(n, 0);
    pw[n - 1] = 1;
    for (int j = n - 2; j >= 0; --j) {
      neg_a_pow = mulmod(neg_a_pow, ((-a) % n + n) % n, n);
      pw[j] = mulmod(C[n - 1][j], neg_a_pow, n);
    }
    for (int j = 0; j < n; ++j)
      coeffs[j] = ((coeffs[j] - mulmod(pa, pw[j], n)) % n + n) % n;
  }
  while (coeffs.size() > 1 && coeffs.back() % n == 0) coeffs.pop_back();
  return PermPoly{n, std::move(coeffs)};
}

PolyWreath poly_wreath_decompose(const PermPoly& f, int m, int n) {
  if (f.n != m * n)
    throw ModulusMismatch("poly_wreath_decompose: f.n != m*n");
  if (!poly_is_permutation(f))
    throw NotAPermutationPolynomial("poly_wreath_decompose: f is not a "
                                    "permutation polynomial");
  const int d = std::max(f.degree(), 0);
  PolyWreath out;
  out.outer.n = m;
  for (long long c : f.coeffs) out.outer.coeffs.push_back(((c % m) + m) % m);

  const auto C = binomials_mod(d + 1, n);
  out.fibers.reserve(m);
  for (int r = 0; r < m; ++r) {
    PermPoly g;
    g.n = n;
    g.coeffs.assign(d + 1, 0);
    g.coeffs[0] = (f.eval(r) / m) % n;  // Q(f(r))
    long long m_pow = 1;                // m^(j-1) mod n
    for (int j = 1; j <= d; ++j) {
      long long s = 0;
      long long r_pow = 1;  // r^(i-j) mod n
      for (int i = j; i <= d; ++i) {
        if (i < static_cast<int>(f.coeffs.size()))
          s = (s + mulmod(mulmod(C[i][j], r_pow, n),
                          ((f.coeffs[i] % n) + n) % n, n)) % n;
        r_pow = mulmod(r_pow, r % n, n);
      }
      g.coeffs[j] = mulmod(m_pow, s, n);
      m_pow = mulmod(m_pow, m % n, n);
    }
    out.fibers.push_back(std::move(g));
  }
  return out;
}

namespace {

/// gcd(n, j!) via Legendre's formula on the factorization of n.
long long gcd_with_factorial(long long n, int j) {
  long long g = 1;
  for (auto [p, k] : factorize(n)) {
    long long e = 0;
    for (long long pw = p; pw <= j; pw *= p) e += j / pw;
    long long cap = std::min<long long>(e, k);
    for (long long i = 0; i < cap; ++i) g *= p;
  }
  return g;
}

}  // namespace

int c_poly_bruteforce(int n, int degree_cap, long long budget) {
  if (n < 2) throw EmptyInput("c_poly_bruteforce: n must be >= 2");
  if (degree_cap < 0) degree_cap = n;
  // Falling-factorial basis: every polynomial function on Z_n is uniquely
  // sum_j c_j * x(x-1)...(x-j+1) with 0 <= c_j < n / gcd(n, j!), and the
  // canonical degree never exceeds the power-basis degree.
  std::vector<long long> range;
  long long total = 1;
  for (int j = 0; j <= degree_cap; ++j) {
    const long long m = n / gcd_with_factorial(n, j);
    if (m == 1 && j > 0) break;  // nonincreasing: all higher ranges are 1 too
    range.push_back(m);
    total *= m;
    if (total > budget)
      throw BudgetExceeded("c_poly_bruteforce: candidate count over budget");
  }

  // basis value tables
  const int J = static_cast<int>(range.size());
  std::vector<std::vector<long long>> basis(J, std::vector<long long>(n));
  for (int x = 0; x < n; ++x) {
    long long v = 1;
    for (int j = 0; j < J; ++j) {
      basis[j][x] = v;
      v = mulmod(v, ((x - j) % n + n) % n, n);
    }
  }

  std::set<std::vector<int>> seen;
  std::vector<long long> c(J, 0);
  int best = n + 1;
  // odometer over the coefficient tuples
  while (true) {
    std::vector<int> values(n);
    std::vector<char> hit(n, 0);
    bool bij = true;
    for (int x = 0; x < n && bij; ++x) {
      long long v = 0;
      for (int j = 0; j < J; ++j)
        if (c[j] != 0) v = (v + mulmod(c[j], basis[j][x], n)) % n;
      values[x] = static_cast<int>(v);
      if (hit[v]) bij = false;
      hit[v] = 1;
    }
    if (bij && seen.insert(values).second) {
      const Perm pi = Perm::make(values);
      int worst = 0;
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, cycle_count(shift(pi, k)));
      best = std::min(best, worst);
    }
    // increment odometer
    int j = 0;
    while (j < J && ++c[j] == range[j]) c[j++] = 0;
    if (j == J) break;
  }
  return best;
}

}  // namespace circsort
