#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "circsort/constructions.hpp"
#include "circsort/mappings.hpp"
#include "circsort/numbers.hpp"
#include "circsort/perm.hpp"

using namespace circsort;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::make(std::move(img));
}

WreathElement random_wreath(int m, int n, std::mt19937& rng) {
  std::vector<Perm> fibers;
  for (int x = 0; x < m; ++x) fibers.push_back(random_perm(n, rng));
  return WreathElement(m, n, random_perm(m, rng), std::move(fibers));
}

}  // namespace

TEST_CASE("affine_perm") {
  CHECK(affine_perm({5, 1, 0}) == Perm::identity(5));
  CHECK(affine_perm({5, 2, 0}) == Perm::make({0, 2, 4, 1, 3}));
  CHECK(affine_perm({6, 5, 1}) == Perm::make({1, 0, 5, 4, 3, 2}));
  CHECK_THROWS_AS(affine_perm({6, 2, 0}), NotCoprime);
}

TEST_CASE("affine_cycle_count closed form") {
  CHECK(affine_cycle_count(1, 10) == 10);
  CHECK(affine_cycle_count(3, 8) == 5);
  CHECK(affine_cycle_count(2, 7) == 3);
  for (int n = 1; n <= 60; ++n)
    for (int a = 1; a < std::max(n, 2); ++a) {
      if (gcd_ll(a, n) != 1) continue;
      CHECK(affine_cycle_count(a, n) ==
            cycle_count(affine_perm({n, a, 0})));
    }
}

TEST_CASE("adding an offset never increases the cycle count") {
  for (int n = 2; n <= 40; ++n)
    for (int a = 1; a < n; ++a) {
      if (gcd_ll(a, n) != 1) continue;
      const int base = cycle_count(affine_perm({n, a, 0}));
      for (int k = 0; k < n; ++k)
        CHECK(cycle_count(affine_perm({n, a, k})) <= base);
    }
}

TEST_CASE("t_coset of multiplication maps equals the divisor sum") {
  for (int n = 2; n <= 40; ++n)
    for (int a = 1; a < n; ++a) {
      if (gcd_ll(a, n) != 1) continue;
      long long sum = 0;
      for (long long d : totients(n).divisors)
        sum += totients(d).phi / mult_order(a, d);
      CHECK(t_coset(affine_perm({n, a, 0})) == n - sum);
    }
}

TEST_CASE("t_aff") {
  CHECK(t_aff(9).value == 6);
  CHECK(t_aff(8).value == 3);
  CHECK(t_aff(15).value == 10);
  CHECK(t_aff(1).value == 0);

  // witness attains the value
  for (int n = 1; n <= 100; ++n) {
    const TAffResult r = t_aff(n);
    CHECK(n - affine_cycle_count(r.witness_a, n) == r.value);
  }

  // and equals the true affine maximum (closed form per unit)
  for (int n = 2; n <= 200; ++n) {
    long long best = 0;
    for (int a = 1; a < n; ++a) {
      if (gcd_ll(a, n) != 1) continue;
      best = std::max(best, n - affine_cycle_count(a, n));
    }
    CHECK(t_aff(n).value == best);
  }
}

TEST_CASE("t_aff special families") {
  // prime powers p^k, twice prime powers, and powers of two
  for (long long p : {3, 5, 7})
    for (int k = 1; k <= 3; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      CHECK(t_aff(pk).value == pk - k - 1);
      CHECK(t_aff(2 * pk).value == 2 * pk - 2 * k - 2);
    }
  for (int k = 1; k <= 3; ++k) {
    const long long n = 1LL << (k + 1);
    CHECK(t_aff(n).value == n - 2 * k - 1);
  }
}

TEST_CASE("quadratic maps") {
  CHECK(quadratic_map(2, 2, 5) == affine_perm({5, 2, 0}));
  CHECK(quadratic_map(2, 3, 5) == Perm::make({0, 2, 1, 4, 3}));
  CHECK_THROWS_AS(quadratic_map(2, 3, 9), NotPrime);
  CHECK_FALSE(quadratic_is_scm(2, 3, 5));
  CHECK(quadratic_is_scm(5, 7, 23));

  // criterion agrees with direct classification whenever the map exists
  for (int p : {5, 7, 11, 13}) {
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b) {
        Perm q = Perm::identity(p);
        bool bijective = true;
        try {
          q = quadratic_map(a, b, p);
        } catch (const NotABijection&) {
          bijective = false;
        }
        if (!bijective) continue;
        CHECK(quadratic_is_scm(a, b, p) ==
              classify_mapping(q).is_strong_complete);
      }
  }
}

TEST_CASE("quadratic witness scan") {
  const auto pairs23 = quadratic_witness_scan(23);
  const std::set<std::pair<int, int>> got(pairs23.begin(), pairs23.end());
  const std::set<std::pair<int, int>> want{{5, 7},   {7, 5},   {10, 14},
                                           {14, 10}, {11, 15}, {15, 11},
                                           {20, 21}, {21, 20}};
  CHECK(got == want);
  CHECK(quadratic_witness_scan(5).empty());
  CHECK_FALSE(quadratic_witness_scan(31).empty());
}

TEST_CASE("the printed 23 element counterexample is a shifted quadratic map") {
  const Perm printed = Perm::make({0, 2, 7, 21, 17, 12, 4, 9, 14, 19, 1, 8,
                                   15, 22, 6, 3, 20, 13, 11, 18, 5, 10, 16});
  CHECK(t_coset(printed) == 21);
  CHECK(classify_mapping(printed).is_strong_complete);

  // non-affine: its slopes are not all equal
  bool affine = false;
  for (int a = 1; a < 23 && !affine; ++a)
    for (int b = 0; b < 23 && !affine; ++b)
      if (printed == affine_perm({23, a, b})) affine = true;
  CHECK_FALSE(affine);

  // shift/translate of one of the mirror pair [5,7] / [7,5]
  bool reachable = false;
  for (int a : {5, 7}) {
    const Perm q = quadratic_map(a, 12 - a, 23);
    for (int k = 0; k < 23 && !reachable; ++k)
      for (int c = 0; c < 23 && !reachable; ++c) {
        std::vector<int> img(23);
        for (int x = 0; x < 23; ++x) img[x] = (q((x + k) % 23) + c) % 23;
        if (Perm::make(std::move(img)) == printed) reachable = true;
      }
  }
  CHECK(reachable);
}

TEST_CASE("wreath flatten and unflatten") {
  CHECK(wreath_flatten(WreathElement::identity(3, 4)) == Perm::identity(12));
  const WreathElement swap23(
      2, 3, Perm::make({1, 0}),
      {Perm::identity(3), Perm::identity(3)});
  CHECK(wreath_flatten(swap23) == Perm::make({1, 0, 3, 2, 5, 4}));

  // the full cycle z -> z+1 on Z_mn is itself of wreath form
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{5, 2}}) {
    std::vector<int> img(m * n);
    for (int z = 0; z < m * n; ++z) img[z] = (z + 1) % (m * n);
    const auto w = wreath_unflatten(Perm::make(std::move(img)), m, n);
    REQUIRE(w.has_value());
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < n; ++y) {
        const int xp = (x + 1) % m;
        const int yp = x == m - 1 ? (y + 1) % n : y;
        CHECK(w->pi(x) == xp);
        CHECK(w->fibers[x](y) == yp);
      }
  }

  std::mt19937 rng(43);
  for (int rep = 0; rep < 50; ++rep) {
    const WreathElement w = random_wreath(4, 5, rng);
    const auto back = wreath_unflatten(wreath_flatten(w), 4, 5);
    REQUIRE(back.has_value());
    CHECK(back->pi == w.pi);
    CHECK(back->fibers == w.fibers);
  }
  // a perm that mixes columns is not of wreath form
  CHECK_FALSE(wreath_unflatten(Perm::make({1, 0, 2, 3, 4, 5}), 2, 3).has_value());
}

TEST_CASE("w_value matches iterated shifts") {
  for (int x = 0; x < 12; ++x) CHECK(w_value(0, 3, 4, x) == 0);
  CHECK(w_value(5, 3, 4, 0) == 1);
  CHECK(w_value(5, 3, 4, 2) == 2);

  std::mt19937 rng(47);
  for (auto [m, n] : {std::pair{3, 4}, std::pair{4, 7}, std::pair{5, 5}}) {
    const int mn = m * n;
    for (int rep = 0; rep < 100; ++rep) {
      const int k = static_cast<int>(rng() % (3 * mn));
      const int x = static_cast<int>(rng() % m);
      const int y = static_cast<int>(rng() % n);
      const int z = x + m * y;
      const int zk = (z + k) % mn;
      CHECK(zk % m == (x + k) % m);
      CHECK(zk / m == (y + w_value(k, m, n, x)) % n);
    }
  }
}

TEST_CASE("shift composition identity for wreath elements") {
  // flatten(w) applied after c^k lands at (pi(x+k), fiber_{x+k}(y + w_k(x)))
  std::mt19937 rng(53);
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 2 + static_cast<int>(rng() % 4);
    const WreathElement w = random_wreath(m, n, rng);
    const Perm flat = wreath_flatten(w);
    const int k = static_cast<int>(rng() % (m * n));
    const Perm shifted = shift(flat, k);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < n; ++y) {
        const int xk = (x + k) % m;
        const int yk = (y + w_value(k, m, n, x)) % n;
        CHECK(shifted(x + m * y) == w.pi(xk) + m * w.fibers[xk](yk));
      }
  }
}

TEST_CASE("cycles of a wreath element come from fiber compositions") {
  // for an outer cycle of length t, the columns it visits split into cycles
  // of lengths t * l_i, where l_i are the cycle lengths of the composed
  // fiber map around the outer cycle
  std::mt19937 rng(59);
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 2 + static_cast<int>(rng() % 4);
    const WreathElement w = random_wreath(m, n, rng);
    const Perm flat = wreath_flatten(w);

    std::vector<int> expected;
    for (const auto& outer_cycle : cycle_decomposition(w.pi)) {
      const int t = static_cast<int>(outer_cycle.size());
      Perm composed = Perm::identity(n);
      for (int x : outer_cycle) composed = compose(w.fibers[x], composed);
      for (int l : cycle_type(composed).parts) expected.push_back(t * l);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(cycle_type(flat).parts == expected);
  }
}

TEST_CASE("product construction bound") {
  const WreathElement triv =
      construct_product(Perm::identity(3), Perm::identity(4));
  CHECK(t_coset(wreath_flatten(triv)) >= 0);

  const Perm d3 = Perm::make({0, 2, 1});
  const WreathElement w9 = construct_product(d3, d3);
  CHECK(t_coset(wreath_flatten(w9)) >= 3 * 1 + 1);

  const Perm a5 = affine_perm({5, 2, 0});
  const WreathElement w15 = construct_product(a5, d3);
  CHECK(t_coset(wreath_flatten(w15)) >= 3 * 3 + 1);

  std::mt19937 rng(61);
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n) {
      if (m * n > 60) continue;
      const Perm pm = random_perm(m, rng);
      const Perm pn = random_perm(n, rng);
      const int bound = n * t_coset(pm) + t_coset(pn);
      CHECK(t_coset(wreath_flatten(construct_product(pm, pn))) >= bound);
    }
}

TEST_CASE("fiber-identity wreath elements satisfy the n*t(m) bound") {
  std::mt19937 rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const int n = 2 + static_cast<int>(rng() % 5);
    const Perm pm = random_perm(m, rng);
    std::vector<Perm> fibers(m, Perm::identity(n));
    const WreathElement w(m, n, pm, std::move(fibers));
    CHECK(t_coset(wreath_flatten(w)) >= n * t_coset(pm));
  }
}

TEST_CASE("a fiber shift with b cycles forces a flat shift with b+1") {
  std::mt19937 rng(71);
  for (int rep = 0; rep < 500; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 3 + static_cast<int>(rng() % 4);
    const WreathElement w = random_wreath(m, n, rng);
    const Perm flat = wreath_flatten(w);
    int best_flat = 0;
    for (int k = 0; k < m * n; ++k)
      best_flat = std::max(best_flat, cycle_count(shift(flat, k)));
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < n; ++t) {
        const int b = cycle_count(shift(w.fibers[i], t));
        CHECK(best_flat >= b + 1);
      }
  }
}

TEST_CASE("two-row and two-column wreath elements always leave 4 cycles") {
  std::mt19937 rng(73);
  for (int rep = 0; rep < 1000; ++rep) {
    const bool two_rows = rng() % 2 == 0;
    const int other = 3 + static_cast<int>(rng() % 5);
    const int m = two_rows ? 2 : other;
    const int n = two_rows ? other : 2;
    const Perm flat = wreath_flatten(random_wreath(m, n, rng));
    int best = 0;
    for (int k = 0; k < m * n; ++k)
      best = std::max(best, cycle_count(shift(flat, k)));
    CHECK(best >= 4);
    CHECK(t_coset(flat) <= m * n - 4);
  }
}

TEST_CASE("pq5 construction") {
  const auto [cfg75, w75] = construct_pq5(7, 5);
  CHECK(t_coset(wreath_flatten(w75)) >= 30);
  CHECK(cfg75.e % (cfg75.q - 1) == 3 % (cfg75.q - 1));

  const auto [cfg53, w53] = construct_pq5(5, 3);
  CHECK(t_coset(wreath_flatten(w53)) >= 10);
  CHECK(cfg53.e % (cfg53.q - 1) == 1);  // e = 3 mod (q-1) with q = 3

  const auto [cfg117, w117] = construct_pq5(11, 7);
  CHECK(t_coset(wreath_flatten(w117)) >= 72);

  CHECK_THROWS_AS(construct_pq5(5, 7), PreconditionViolated);
  CHECK_THROWS_AS(construct_pq5(9, 3), NotPrime);
}

TEST_CASE("pq3 construction") {
  const Pq3Witness w53 = construct_pq3(5, 3);
  CHECK(t_coset(wreath_flatten(w53.element)) == 12);

  const Pq3Witness w73 = construct_pq3(7, 3);
  CHECK(t_coset(wreath_flatten(w73.element)) == 18);

  const Pq3Witness w135 = construct_pq3(13, 5);
  CHECK(t_coset(wreath_flatten(w135.element)) == 62);

  const Pq3Witness wsq = construct_pq3(13, 13);
  CHECK(t_coset(wreath_flatten(wsq.element)) == 166);

  CHECK_THROWS_AS(construct_pq3(7, 5), DivisibilityViolated);
  CHECK_THROWS_AS(construct_pq3(9, 3), NotPrime);
}

TEST_CASE("every pq3 shift has exactly 3 cycles") {
  for (auto [p, q] : {std::pair{5, 3}, std::pair{7, 3}, std::pair{11, 3},
                      std::pair{13, 5}}) {
    const Perm flat = wreath_flatten(construct_pq3(p, q).element);
    for (int k = 0; k < p * q; ++k)
      CHECK(cycle_count(shift(flat, k)) == 3);
  }
}

TEST_CASE("circulant rank") {
  CHECK(circulant_rank(7, 3) == 6);
  CHECK(circulant_rank(13, 5) == 12);
  CHECK(circulant_rank(5, 3) == 4);
  CHECK(circulant_rank(13, 3) == 12);
  CHECK_THROWS_AS(circulant_rank(7, 5), DivisibilityViolated);
}
