#include "circsort/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "circsort/numbers.hpp"

namespace circsort {

namespace {

/// Partial functional graphs of all n cyclic shifts of the permutation being
/// built. Assigning f(x) = v adds, for every shift k, the edge
/// (x - k) -> v to shift k's graph. The partial graph of each shift is a
/// disjoint union of paths and closed cycles; paths are tracked through
/// endpoint links with an undo stack for O(1) rollback.
class ShiftPaths {
 public:
  explicit ShiftPaths(int n)
      : n_(n),
        pstart_(static_cast<size_t>(n) * n),
        pend_(static_cast<size_t>(n) * n),
        plen_(static_cast<size_t>(n) * n, 0),
        closed_(n, 0) {
    for (int k = 0; k < n; ++k) {
      for (int x = 0; x < n; ++x) {
        pstart_[idx(k, x)] = x;
        pend_[idx(k, x)] = x;
      }
    }
  }

  /// Length (in nodes) of the cycle that assigning f(x) = v would close in
  /// shift k, or 0 if it closes none.
  int closing_cycle_len(int k, int x, int v) const {
    const int u = x - k >= 0 ? x - k : x - k + n_;
    const int s = pstart_[idx(k, u)];
    return s == v ? plen_[idx(k, v)] + 1 : 0;
  }

  /// Adds the shift-k edge of the assignment f(x) = v.
  void add(int k, int x, int v) {
    const int u = x - k >= 0 ? x - k : x - k + n_;
    const int s = pstart_[idx(k, u)];
    if (s == v) {
      ++closed_[k];
      undo_.push_back({k, -1, -1, -1, -1, 0});
      return;
    }
    const int e = pend_[idx(k, v)];
    undo_.push_back({k, s, e, u, v, plen_[idx(k, s)]});
    pstart_[idx(k, e)] = s;
    pend_[idx(k, s)] = e;
    plen_[idx(k, s)] += plen_[idx(k, v)] + 1;
  }

  /// Rolls back the most recent `count` add() calls.
  void rollback(int count) {
    for (int i = 0; i < count; ++i) {
      const Undo& un = undo_.back();
      if (un.s < 0) {
        --closed_[un.k];
      } else {
        pstart_[idx(un.k, un.e)] = un.v;
        pend_[idx(un.k, un.s)] = un.u;
        plen_[idx(un.k, un.s)] = un.oldlen;
      }
      undo_.pop_back();
    }
  }

  int closed(int k) const { return closed_[k]; }
  int max_closed() const {
    return *std::max_element(closed_.begin(), closed_.end());
  }

 private:
  struct Undo {
    int k, s, e, u, v, oldlen;  // s < 0 marks a cycle closure
  };
  size_t idx(int k, int x) const { return static_cast<size_t>(k) * n_ + x; }

  int n_;
  std::vector<int> pstart_, pend_, plen_;
  std::vector<int> closed_;
  std::vector<Undo> undo_;
};

}  // namespace

SearchOutcome scm_enumerate(const ScmSearchConfig& config) {
  const int n = config.n;
  if (n < 1) throw EmptyInput("scm_enumerate: n must be >= 1");
  SearchOutcome out;
  if (n == 1) {
    out.count = 1;
    if (config.mode != SearchMode::Count) out.witnesses.push_back(Perm::identity(1));
    return out;
  }

  const bool need_diff = config.constraint != SearchConstraint::None;
  const bool need_sum = config.constraint == SearchConstraint::StrongComplete;
  int prune_lo = 0, prune_hi = -1;  // inclusive cycle-length prune window
  if (config.target) {
    prune_lo = 2;
    prune_hi = config.target->kind == SearchTarget::Kind::AllShiftsType1NMinus1
                   ? n - 2
                   : config.target->max_cycle;
  }

  const bool track_paths = config.target.has_value();

  std::vector<int> img(n, -1);
  img[0] = 0;
  std::vector<char> used(n, 0), used_diff(n, 0), used_sum(n, 0);
  used[0] = 1;
  if (need_diff) used_diff[0] = 1;
  if (need_sum) used_sum[0] = 1;

  ShiftPaths paths(track_paths ? n : 1);
  if (track_paths)
    for (int k = 0; k < n; ++k) paths.add(k, 0, 0);

  // slope normalization support
  std::vector<long long> inv_diff(n, -1);
  if (config.slope_normalize) {
    for (int d = 1; d < n; ++d)
      if (gcd_ll(d, n) == 1) inv_diff[d] = modinv(d, n);
  }

  bool stopped = false;
  int prune_k = 0;  // the shift that pruned last; candidates often fail alike

  auto dfs = [&](auto&& self, int x) -> void {
    if (stopped) return;
    if (x == n) {
      ++out.count;
      if (config.mode != SearchMode::Count) {
        out.witnesses.push_back(Perm::make(img));
        if (config.mode == SearchMode::First) stopped = true;
      }
      return;
    }
    const bool pinned = x - 1 < static_cast<int>(config.prefix.size());
    for (int v = 0; v < n; ++v) {
      if (pinned && v != config.prefix[x - 1]) continue;
      if (used[v]) continue;
      const int d = v - x >= 0 ? v - x : v - x + n;
      const int s = (v + x) % n;
      if (need_diff && used_diff[d]) continue;
      if (need_sum && used_sum[s]) continue;
      if (config.slope_normalize && x >= 2) {
        bool ok = true;
        for (int y = 0; y < x; ++y) {
          const int dd = x - y;
          if (inv_diff[dd] < 0) continue;
          const int slope =
              static_cast<int>(mulmod(((v - img[y]) % n + n) % n, inv_diff[dd], n));
          if (slope < img[1]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      if (config.budget > 0 && out.nodes_visited >= config.budget) {
        out.exhausted = false;
        stopped = true;
        return;
      }
      ++out.nodes_visited;

      // per-shift cycle pruning: probe every shift for a closing cycle in
      // the forbidden window before touching any state, trying the most
      // recent culprit first
      if (track_paths) {
        bool pruned = false;
        const int len0 = paths.closing_cycle_len(prune_k, x, v);
        if (len0 >= prune_lo && len0 <= prune_hi) pruned = true;
        for (int k = 0; !pruned && k < n; ++k) {
          if (k == prune_k) continue;
          const int len = paths.closing_cycle_len(k, x, v);
          if (len >= prune_lo && len <= prune_hi) {
            prune_k = k;
            pruned = true;
          }
        }
        if (pruned) continue;
        for (int k = 0; k < n; ++k) paths.add(k, x, v);
      }

      img[x] = v;
      used[v] = 1;
      if (need_diff) used_diff[d] = 1;
      if (need_sum) used_sum[s] = 1;
      self(self, x + 1);
      img[x] = -1;
      used[v] = 0;
      if (need_diff) used_diff[d] = 0;
      if (need_sum) used_sum[s] = 0;
      if (track_paths) paths.rollback(n);
      if (stopped) return;
    }
  };
  dfs(dfs, 1);
  return out;
}

std::vector<std::vector<int>> shard_prefixes(const ScmSearchConfig& config,
                                             int depth) {
  const int n = config.n;
  const bool need_diff = config.constraint != SearchConstraint::None;
  const bool need_sum = config.constraint == SearchConstraint::StrongComplete;
  std::vector<std::vector<int>> prefixes = {{}};
  for (int x = 1; x <= depth && x < n; ++x) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : prefixes) {
      for (int v = 1; v < n; ++v) {
        bool ok = true;
        // bijection / difference / sum distinctness against f(0)=0 and pre
        if (need_diff && (v - x) % n == 0) ok = false;
        if (need_sum && (v + x) % n == 0) ok = false;
        for (int y = 1; ok && y < x; ++y) {
          const int w = pre[y - 1];
          if (w == v) ok = false;
          if (need_diff && ((v - x) - (w - y)) % n == 0) ok = false;
          if (need_sum && ((v + x) - (w + y)) % n == 0) ok = false;
        }
        if (!ok) continue;
        auto np = pre;
        np.push_back(v);
        next.push_back(std::move(np));
      }
    }
    prefixes = std::move(next);
  }
  return prefixes;
}

SearchOutcome scm_enumerate_parallel(ScmSearchConfig config, int threads,
                                     int shard_depth) {
  if (threads < 1) threads = 1;
  if (!config.prefix.empty())
    throw PreconditionViolated(
        "scm_enumerate_parallel: config must not already carry a prefix");
  const auto prefixes = shard_prefixes(config, shard_depth);
  std::vector<SearchOutcome> results(prefixes.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= prefixes.size()) return;
      ScmSearchConfig shard = config;
      shard.prefix = prefixes[i];
      results[i] = scm_enumerate(shard);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SearchOutcome merged;
  for (const auto& r : results) {
    merged.count += r.count;
    merged.nodes_visited += r.nodes_visited;
    merged.exhausted = merged.exhausted && r.exhausted;
    merged.witnesses.insert(merged.witnesses.end(), r.witnesses.begin(),
                            r.witnesses.end());
  }
  std::sort(merged.witnesses.begin(), merged.witnesses.end());
  return merged;
}

namespace {

/// Runs the targeted enumeration over slope-normalized representatives only
/// (minimal slope at the pair (0,1)), filters them with `keep`, and expands
/// the survivors through the transforms x -> a^{-1}(p(ax+b) - p(b)).
///
/// Sound because every class contains a normalized representative (map the
/// minimizing pair, whose difference is invertible by definition, onto
/// (0,1)) and the transforms preserve both constraint flags and the
/// multiset of shift cycle types, hence `keep`. Each expanded candidate is
/// rechecked anyway.
template <class Keep>
std::vector<Perm> normalized_witness_search(ScmSearchConfig cfg,
                                            const Keep& keep) {
  const int n = cfg.n;
  cfg.mode = SearchMode::Collect;
  cfg.slope_normalize = true;
  SearchOutcome out = scm_enumerate(cfg);
  if (!out.exhausted)
    throw BudgetExceeded("witness search: node budget exhausted");
  std::set<Perm> hits;
  for (const Perm& p : out.witnesses) {
    if (!keep(p)) continue;
    for (int a = 1; a < std::max(n, 2); ++a) {
      if (n > 1 && gcd_ll(a, n) != 1) continue;
      for (int b = 0; b < n; ++b) {
        Perm q = slope_transform(p, a, b);
        if (keep(q)) hits.insert(std::move(q));
      }
    }
  }
  return {hits.begin(), hits.end()};
}

}  // namespace

std::vector<Perm> profile_witness_search(int n, long long budget) {
  if (n < 4) throw EmptyInput("profile_witness_search: n must be >= 4");
  ScmSearchConfig cfg;
  cfg.n = n;
  cfg.constraint = SearchConstraint::StrongComplete;
  cfg.target = SearchTarget::all_shifts_n_minus_1();
  cfg.budget = budget;
  const CycleType want{{1, n - 1}};
  return normalized_witness_search(cfg, [&](const Perm& p) {
    const CosetProfile prof = coset_profile(p);
    for (const CycleType& t : prof.shift_types)
      if (!(t == want)) return false;
    return true;
  });
}

std::vector<Perm> avoid_cycle_search(int n, int L, long long budget) {
  if (n < 3 || L < 1 || L > n - 2)
    throw EmptyInput("avoid_cycle_search: need n >= 3 and 1 <= L <= n-2");
  ScmSearchConfig cfg;
  cfg.n = n;
  cfg.constraint = SearchConstraint::Orthomorphism;
  cfg.target = SearchTarget::avoid_cycles_up_to(L);
  cfg.budget = budget;
  return normalized_witness_search(cfg, [&](const Perm& p) {
    const CosetProfile prof = coset_profile(p);
    for (const auto& mn : prof.min_nontrivial_cycle)
      if (mn && *mn <= L) return false;
    return true;
  });
}

int exhaustive_t(int n, int guard_n) {
  if (n < 1) throw EmptyInput("exhaustive_t: n must be >= 1");
  if (n > guard_n)
    throw BudgetExceeded("exhaustive_t: n exceeds the configured guard");
  if (n <= 2) return 0;

  std::vector<int> img(n, -1);
  img[0] = 0;
  std::vector<char> used(n, 0);
  used[0] = 1;
  ShiftPaths paths(n);
  for (int k = 0; k < n; ++k) paths.add(k, 0, 0);

  int best = n + 1;  // minimal over perms of max shift cycle count

  auto dfs = [&](auto&& self, int x) -> void {
    if (x == n) {
      best = std::min(best, paths.max_closed());
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int added = 0;
      bool pruned = false;
      for (int k = 0; k < n; ++k) {
        paths.add(k, x, v);
        ++added;
        if (paths.closed(k) >= best) {  // every completion has >= best cycles
          pruned = true;
          break;
        }
      }
      if (pruned) {
        paths.rollback(added);
        continue;
      }
      used[v] = 1;
      img[x] = v;
      self(self, x + 1);
      img[x] = -1;
      used[v] = 0;
      paths.rollback(added);
    }
  };
  dfs(dfs, 1);
  return n - best;
}

Perm canonical_form(const Perm& p) {
  const int n = p.n();
  if (n == 1) return p;
  std::vector<int> best = p.images();
  std::vector<int> cand(n);
  for (int a = 1; a < n; ++a) {
    if (gcd_ll(a, n) != 1) continue;
    const long long ainv = modinv(a, n);
    for (int b = 0; b < n; ++b) {
      // base(x) = a^{-1} p(a(x+b)); then add the b' minimizing lexicographically
      for (int bp = 0; bp < n; ++bp) {
        for (int x = 0; x < n; ++x) {
          const int arg = static_cast<int>((static_cast<long long>(a) * (x + b)) % n);
          cand[x] = static_cast<int>((mulmod(ainv, p(arg), n) + bp) % n);
        }
        if (cand < best) best = cand;
      }
    }
  }
  return Perm::make(best);
}

std::vector<int> slope_set(const Perm& p) {
  const int n = p.n();
  std::vector<long long> inv(n, -1);
  for (int d = 1; d < n; ++d)
    if (gcd_ll(d, n) == 1) inv[d] = modinv(d, n);
  std::vector<int> slopes;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < x; ++y) {
      const int d = x - y;
      if (inv[d] < 0) continue;
      slopes.push_back(
          static_cast<int>(mulmod(((p(x) - p(y)) % n + n) % n, inv[d], n)));
    }
  }
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

Perm slope_transform(const Perm& p, int a, int b) {
  const int n = p.n();
  if (gcd_ll(a, n) != 1) throw NotCoprime("slope_transform: gcd(a, n) != 1");
  const long long ainv = modinv(a, n);
  const int pb = p(((b % n) + n) % n);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) {
    const int arg = static_cast<int>(
        ((static_cast<long long>(a) * x + b) % n + n) % n);
    img[x] = static_cast<int>(mulmod(ainv, ((p(arg) - pb) % n + n) % n, n));
  }
  return Perm::make(std::move(img));
}

}  // namespace circsort
