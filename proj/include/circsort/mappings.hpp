#pragma once

#include <optional>

#include "circsort/perm.hpp"

namespace circsort {

/// Orthomorphism / complete-mapping flags of a permutation of Z_n.
struct MappingClass {
  bool is_orthomorphism = false;   // x |-> p(x) - x is a bijection
  bool is_complete = false;        // x |-> p(x) + x is a bijection
  bool is_strong_complete = false; // both at once

  bool operator==(const MappingClass&) const = default;
};

enum class MappingKind { Orthomorphism, Complete, StrongComplete };

MappingClass classify_mapping(const Perm& p);

/// Backtracking search for a witness permutation of the requested kind,
/// exhaustive over all of S(Z_n) with ascending value order. Returns the
/// lexicographically first witness, or nullopt if none exists.
/// Throws BudgetExceeded if `node_budget` (when positive) is hit first.
std::optional<Perm> existence_scan(int n, MappingKind kind,
                                   long long node_budget = 0);

/// |{ i : i + p(i) >= n }| over integer representatives in {0,...,n-1}.
int carry_count(const Perm& p);

}  // namespace circsort
