#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "circsort/constructions.hpp"
#include "circsort/mappings.hpp"
#include "circsort/perm.hpp"

namespace circsort {

/// Shared permutation text format: one line of n space-separated integers,
/// the images pi(0) ... pi(n-1). Lines starting with '#' are comments; a
/// "# expect t>=V" header asserts a lower bound checked by verification.
struct PermFile {
  Perm perm;
  std::optional<int> expect_t;
};

Perm parse_perm_line(const std::string& line);
PermFile read_perm_stream(std::istream& in);
PermFile read_perm_file(const std::string& path);
std::string format_perm(const Perm& p);
void write_perm_file(const std::string& path, const Perm& p,
                     std::optional<int> expect_t = std::nullopt);

/// Wreath text format: header line "m n", then the outer permutation line,
/// then m fiber lines.
WreathElement read_wreath_stream(std::istream& in);
std::string format_wreath(const WreathElement& w);

/// Polynomial text format: "n: a0 a1 a2 ...".
PermPoly parse_poly(const std::string& line);
std::string format_poly(const PermPoly& f);

/// JSON summary of a permutation:
/// {"n":..., "t_coset":..., "shift_cycle_types":[[...]],
///  "mapping":{"orthomorphism":..., "complete":..., "strong_complete":...}}
std::string profile_json(const Perm& p);

}  // namespace circsort
