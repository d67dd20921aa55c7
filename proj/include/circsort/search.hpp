#pragma once

#include <optional>
#include <vector>

#include "circsort/perm.hpp"

namespace circsort {

enum class SearchMode { Count, Collect, First };

enum class SearchConstraint { StrongComplete, Orthomorphism, None };

/// Pruning target for the backtracking enumerators.
struct SearchTarget {
  enum class Kind { AllShiftsType1NMinus1, AvoidCyclesUpTo };
  Kind kind = Kind::AllShiftsType1NMinus1;
  int max_cycle = 0;  // L, for AvoidCyclesUpTo

  static SearchTarget all_shifts_n_minus_1() {
    return {Kind::AllShiftsType1NMinus1, 0};
  }
  static SearchTarget avoid_cycles_up_to(int L) {
    return {Kind::AvoidCyclesUpTo, L};
  }
};

/// Parameters of the normalized (f(0) = 0) backtracking enumerator.
struct ScmSearchConfig {
  int n = 0;
  SearchMode mode = SearchMode::Count;
  std::optional<SearchTarget> target;
  SearchConstraint constraint = SearchConstraint::StrongComplete;
  bool slope_normalize = false;
  std::vector<int> prefix;   // fixes f(1), f(2), ... for tree sharding
  long long budget = 0;      // node limit, 0 = unlimited
};

struct SearchOutcome {
  long long count = 0;
  std::vector<Perm> witnesses;   // Collect / First modes
  long long nodes_visited = 0;
  bool exhausted = true;         // false iff the budget cut the shard short
};

/// Depth-first enumeration of permutations with f(0) = 0 under the active
/// constraint, candidate values in ascending order. Counts and witness
/// lists are exact for the explored shard.
SearchOutcome scm_enumerate(const ScmSearchConfig& config);

/// Depth-d prefixes (values of f(1), ..., f(d)) that pass the pointwise
/// constraints; the subtrees below them partition the full search tree.
std::vector<std::vector<int>> shard_prefixes(const ScmSearchConfig& config,
                                             int depth = 2);

/// Runs the shards of `config` on `threads` workers and merges the outcomes
/// (counts sum, witness lists merge in lexicographic order).
SearchOutcome scm_enumerate_parallel(ScmSearchConfig config, int threads,
                                     int shard_depth = 2);

/// All normalized permutations whose every shift has cycle type (1, n-1).
std::vector<Perm> profile_witness_search(int n, long long budget = 0);

/// Normalized orthomorphisms none of whose shifts has a nontrivial cycle of
/// length in [2, L].
std::vector<Perm> avoid_cycle_search(int n, int L, long long budget = 0);

/// Exact t(n) by branch-and-bound over normalized permutations.
/// Throws BudgetExceeded when n > guard_n.
int exhaustive_t(int n, int guard_n = 13);

/// Lexicographically smallest image sequence over the transform group
/// x |-> a^{-1} p(a(x+b)) + b'. Idempotent class function.
Perm canonical_form(const Perm& p);

/// Sorted multiset of slopes (p(x)-p(y)) / (x-y) over unordered pairs with
/// invertible difference. Never contains 0.
std::vector<int> slope_set(const Perm& p);

/// p'(x) = a^{-1} (p(ax + b) - p(b)); preserves the slope multiset, the
/// mapping-class flags and the multiset of shift cycle types.
Perm slope_transform(const Perm& p, int a, int b);

}  // namespace circsort
