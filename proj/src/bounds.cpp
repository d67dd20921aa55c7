#include "circsort/bounds.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "circsort/constructions.hpp"
#include "circsort/io.hpp"
#include "circsort/numbers.hpp"

namespace circsort {

std::string to_string(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::Affine: return "affine";
    case LowerProvenance::Product: return "product";
    case LowerProvenance::Pq5: return "pq5";
    case LowerProvenance::Pq3: return "pq3";
    case LowerProvenance::WitnessFile: return "witness_file";
    case LowerProvenance::Exhaustive: return "exhaustive";
    case LowerProvenance::PrimeRule: return "prime_rule";
  }
  return "?";
}

std::string to_string(UpperProvenance p) {
  switch (p) {
    case UpperProvenance::NMinus2: return "n_minus_2";
    case UpperProvenance::Div2Or3: return "div_2_or_3";
    case UpperProvenance::ScmNonexistence: return "scm_nonexistence";
    case UpperProvenance::Exhaustive: return "exhaustive";
    case UpperProvenance::CachedSearch: return "cached_search";
  }
  return "?";
}

const std::map<int, std::pair<int, Perm>>& bundled_exact_witnesses() {
  static const std::map<int, std::pair<int, Perm>> table = [] {
    std::map<int, std::pair<int, Perm>> t;
    auto add = [&](int n, int tn, std::vector<int> img) {
      t.emplace(n, std::make_pair(tn, Perm::make(std::move(img))));
    };
    add(4, 1, {0, 1, 3, 2});
    add(6, 3, {0, 1, 3, 5, 2, 4});
    add(8, 5, {0, 1, 3, 5, 2, 7, 4, 6});
    add(9, 6, {0, 1, 3, 4, 6, 2, 8, 5, 7});
    add(10, 7, {0, 1, 4, 9, 3, 8, 7, 2, 6, 5});
    add(12, 9, {0, 4, 7, 9, 6, 1, 2, 11, 8, 10, 5, 3});
    add(14, 11, {0, 5, 8, 13, 9, 7, 11, 4, 1, 12, 3, 10, 6, 2});
    add(15, 12, {0, 11, 9, 5, 7, 14, 3, 6, 13, 12, 10, 2, 8, 4, 1});
    add(16, 13, {0, 2, 4, 1, 12, 13, 9, 14, 10, 5, 3, 6, 11, 7, 8, 15});
    add(18, 15, {0, 5, 1, 17, 7, 11, 13, 10, 9, 4, 2, 16, 3, 12, 15, 8, 6, 14});
    add(20, 17,
        {0, 15, 7, 10, 2, 9, 17, 3, 14, 6, 12, 19, 5, 8, 4, 13, 16, 11, 1, 18});
    add(21, 18,
        {0, 2, 4, 13, 19, 16, 17, 6, 8, 11, 9, 7, 5, 18, 12, 1, 20, 3, 14, 10,
         15});
    return t;
  }();
  return table;
}

namespace {

struct LowerCandidate {
  int value = -1;
  LowerProvenance provenance = LowerProvenance::Affine;
  std::optional<Perm> witness;
};

/// Candidate ranking: higher value wins; on ties the earlier provenance in
/// {affine, pq3, pq5, product, witness_file} wins.
int provenance_rank(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::Affine: return 0;
    case LowerProvenance::Pq3: return 1;
    case LowerProvenance::Pq5: return 2;
    case LowerProvenance::Product: return 3;
    case LowerProvenance::WitnessFile: return 4;
    default: return 5;
  }
}

void consider(LowerCandidate& best, int value, LowerProvenance prov,
              std::optional<Perm> witness) {
  if (value > best.value ||
      (value == best.value && provenance_rank(prov) < provenance_rank(best.provenance))) {
    best.value = value;
    best.provenance = prov;
    best.witness = std::move(witness);
  }
}

/// Best certified lower-bound witness for t(n), by value. Memoized across
/// the recursion used by the product construction.
const LowerCandidate& best_lower(int n, const std::string& witness_dir,
                                 std::map<int, LowerCandidate>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  LowerCandidate best;
  if (n == 1) {
    best = {0, LowerProvenance::Exhaustive, Perm::identity(1)};
    return memo.emplace(n, std::move(best)).first->second;
  }

  // affine witness from the divisor-sum formula
  {
    const TAffResult aff = t_aff(n);
    const Perm w = affine_perm({n, static_cast<int>(aff.witness_a), 0});
    consider(best, t_coset(w),
             is_prime(n) ? LowerProvenance::PrimeRule : LowerProvenance::Affine,
             w);
  }
  if (is_prime(n)) return memo.emplace(n, std::move(best)).first->second;

  // pq3 / pq5 for odd semiprimes
  if (n % 2 == 1) {
    for (auto [p, k] : factorize(n)) {
      if (k == 2 && p * p == n && (p - 1) % (p - 1) == 0) {
        const Pq3Witness w = construct_pq3(static_cast<int>(p), static_cast<int>(p));
        const Perm flat = wreath_flatten(w.element);
        consider(best, t_coset(flat), LowerProvenance::Pq3, flat);
      }
    }
    const auto fac = factorize(n);
    if (fac.size() == 2 && fac[0].second == 1 && fac[1].second == 1 &&
        fac[0].first >= 3) {
      const int q = static_cast<int>(fac[0].first);
      const int p = static_cast<int>(fac[1].first);
      if ((p - 1) % (q - 1) == 0) {
        const Pq3Witness w = construct_pq3(p, q);
        const Perm flat = wreath_flatten(w.element);
        consider(best, t_coset(flat), LowerProvenance::Pq3, flat);
      }
      const auto [cfg, elem] = construct_pq5(p, q);
      const Perm flat = wreath_flatten(elem);
      consider(best, t_coset(flat), LowerProvenance::Pq5, flat);
    }
  }

  // product construction over all factor pairs n = m1 * m2
  for (int m1 = 2; m1 * m1 <= n; ++m1) {
    if (n % m1 != 0) continue;
    const int m2 = n / m1;
    for (auto [mo, mi] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
      if (mo < 2 || mi < 2) continue;
      const LowerCandidate outer = best_lower(mo, witness_dir, memo);
      const LowerCandidate inner = best_lower(mi, witness_dir, memo);
      if (!outer.witness || !inner.witness) continue;
      const Perm flat =
          wreath_flatten(construct_product(*outer.witness, *inner.witness));
      consider(best, t_coset(flat), LowerProvenance::Product, flat);
    }
  }

  // bundled exact witnesses (composite n <= 21) and user-supplied files
  if (auto it = bundled_exact_witnesses().find(n);
      it != bundled_exact_witnesses().end()) {
    consider(best, t_coset(it->second.second), LowerProvenance::WitnessFile,
             it->second.second);
  }
  if (!witness_dir.empty() && std::filesystem::is_directory(witness_dir)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(witness_dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::optional<PermFile> pf;
      try {
        pf = read_perm_file(file.string());
      } catch (const ParseError&) {
        continue;  // unrelated file
      }
      if (pf->perm.n() != n) continue;
      const int t = t_coset(pf->perm);
      if (pf->expect_t && t < *pf->expect_t)
        throw InvalidWitness(file.string() + ": t_coset " + std::to_string(t) +
                             " below asserted " + std::to_string(*pf->expect_t));
      consider(best, t, LowerProvenance::WitnessFile, pf->perm);
    }
  }
  return memo.emplace(n, std::move(best)).first->second;
}

}  // namespace

BoundsReport t_bounds(int n, const std::string& witness_dir) {
  if (n < 2) throw EmptyInput("t_bounds: n must be >= 2");
  BoundsReport rep;
  rep.n = n;

  std::map<int, LowerCandidate> memo;
  const LowerCandidate low = best_lower(n, witness_dir, memo);
  rep.lower = low.value;
  rep.lower_provenance = low.provenance;
  rep.witness = low.witness;

  if (is_prime(n)) {
    rep.upper = n - 2;
    rep.upper_provenance = UpperProvenance::NMinus2;
  } else if (n == 25) {
    // certified by the exhaustive strong-complete-mapping search
    rep.upper = 22;
    rep.upper_provenance = UpperProvenance::CachedSearch;
  } else if (n % 2 == 0 || n % 3 == 0) {
    rep.upper = n - 3;
    rep.upper_provenance = UpperProvenance::Div2Or3;
  } else {
    rep.upper = n - 2;
    rep.upper_provenance = UpperProvenance::NMinus2;
  }
  if (rep.lower > rep.upper)
    throw Error("t_bounds: lower bound exceeds upper bound (internal)");
  rep.exact = rep.lower == rep.upper;
  return rep;
}

std::string run_table(int max_n, const std::string& witness_dir) {
  if (max_n < 4) throw EmptyInput("run_table: max_n must be >= 4");
  std::ostringstream out;
  out << "n\tt(n)\tlower_by\tupper_by\n";
  for (int n = 4; n <= max_n; ++n) {
    if (is_prime(n)) continue;
    const BoundsReport rep = t_bounds(n, witness_dir);
    if (auto it = bundled_exact_witnesses().find(n);
        it != bundled_exact_witnesses().end()) {
      const auto& [tn, wit] = it->second;
      if (t_coset(wit) != tn)
        throw InvalidWitness("bundled witness for n=" + std::to_string(n) +
                             " does not attain t(n)=" + std::to_string(tn));
      if (rep.lower != tn || rep.upper != tn)
        throw InvalidWitness("bounds for n=" + std::to_string(n) +
                             " disagree with the exact value " +
                             std::to_string(tn));
    }
    out << n << '\t';
    if (rep.exact)
      out << rep.lower;
    else
      out << '[' << rep.lower << ',' << rep.upper << ']';
    out << '\t' << to_string(rep.lower_provenance) << '\t'
        << to_string(rep.upper_provenance) << '\n';
  }
  return out.str();
}

VerifyReport verify_witness(const std::string& path) {
  const PermFile pf = read_perm_file(path);
  VerifyReport rep{pf.perm, coset_profile(pf.perm), classify_mapping(pf.perm),
                   pf.expect_t, true};
  if (rep.expect_t && rep.profile.t_coset < *rep.expect_t) rep.ok = false;
  return rep;
}

}  // namespace circsort
