#pragma once

#include <optional>
#include <vector>

#include "circsort/errors.hpp"

namespace circsort {

/// A bijection on Z_n, stored as its image sequence: image[x] = pi(x).
///
/// Immutable after construction; all operations below are pure functions.
class Perm {
 public:
  /// Validates that `images` is a bijection on {0,...,len-1}.
  /// Throws EmptyInput or NotABijection otherwise.
  static Perm make(std::vector<int> images);

  static Perm identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  Perm inverse() const;

 private:
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// Multiset of cycle lengths (fixed points included), sorted ascending.
struct CycleType {
  std::vector<int> parts;

  int cycle_count() const { return static_cast<int>(parts.size()); }
  bool operator==(const CycleType& o) const { return parts == o.parts; }
  bool operator<(const CycleType& o) const { return parts < o.parts; }
};

/// Cycle types of all n cyclic shifts x |-> pi(x+k) of a permutation,
/// with the derived coset statistics.
struct CosetProfile {
  int n = 0;
  std::vector<CycleType> shift_types;           // entry k: type of shift(p, k)
  int t_coset = 0;                              // min_k (n - #cycles of shift k)
  std::vector<int> fixed_counts;                // fixed points per shift
  std::vector<std::optional<int>> min_nontrivial_cycle;  // shortest cycle >= 2

  /// Number of cycles of shift k.
  int cycles(int k) const { return shift_types[k].cycle_count(); }
};

/// compose(p, q)(x) = p(q(x)). Throws ModulusMismatch if p.n != q.n.
Perm compose(const Perm& p, const Perm& q);

/// shift(p, k)(x) = p((x + k) mod n); k is reduced mod n.
Perm shift(const Perm& p, long long k);

/// Cycles partition {0,...,n-1}; each cycle starts at its minimum element
/// and cycles are sorted by that minimum.
std::vector<std::vector<int>> cycle_decomposition(const Perm& p);

CycleType cycle_type(const Perm& p);

/// Number of cycles, fixed points included.
int cycle_count(const Perm& p);

/// n - cyc(p): the minimum number of transpositions whose product is p.
int transposition_distance(const Perm& p);

CosetProfile coset_profile(const Perm& p);

/// t([p]) without materializing the full profile.
int t_coset(const Perm& p);

/// p'(x) = p(x) - p(0) mod n, so that p'(0) = 0. The multiset of shift
/// cycle types is preserved (rotated).
Perm normalize_zero(const Perm& p);

}  // namespace circsort
