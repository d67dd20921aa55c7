#pragma once

#include <map>
#include <optional>
#include <string>

#include "circsort/mappings.hpp"
#include "circsort/perm.hpp"

namespace circsort {

enum class LowerProvenance {
  Affine,
  Product,
  Pq5,
  Pq3,
  WitnessFile,
  Exhaustive,
  PrimeRule,
};

enum class UpperProvenance {
  NMinus2,
  Div2Or3,
  ScmNonexistence,
  Exhaustive,
  CachedSearch,
};

std::string to_string(LowerProvenance p);
std::string to_string(UpperProvenance p);

/// Certified bounds on t(n). The lower bound always comes with a concrete
/// permutation whose t_coset was recomputed, except the prime rule, whose
/// affine witness is produced on demand.
struct BoundsReport {
  int n = 0;
  int lower = 0;
  LowerProvenance lower_provenance = LowerProvenance::Affine;
  int upper = 0;
  UpperProvenance upper_provenance = UpperProvenance::NMinus2;
  bool exact = false;
  std::optional<Perm> witness;
};

/// Bounds for t(n); witness_dir may hold extra lower-bound permutation files
/// (shared text format), which are verified before use.
BoundsReport t_bounds(int n, const std::string& witness_dir = "");

/// The exact t(n) values and witness permutations for composite n <= 21,
/// as bundled data.
const std::map<int, std::pair<int, Perm>>& bundled_exact_witnesses();

/// Composite-n bounds table for 4 <= n <= max_n. For composite n <= 21 the
/// bundled witness must verify to exactly the known t(n), otherwise
/// InvalidWitness is thrown. Output is byte-stable for a fixed witness_dir.
std::string run_table(int max_n, const std::string& witness_dir = "");

/// Verification record for a permutation file.
struct VerifyReport {
  Perm perm;
  CosetProfile profile;
  MappingClass mapping;
  std::optional<int> expect_t;
  bool ok = true;  // t_coset >= expect_t when an expectation is present
};

VerifyReport verify_witness(const std::string& path);

}  // namespace circsort
