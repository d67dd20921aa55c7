#include "circsort/mappings.hpp"

#include <vector>

namespace circsort {

namespace {

bool is_bijection_of_zn(const std::vector<int>& values, int n) {
  std::vector<char> seen(n, 0);
  for (int v : values) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

MappingClass classify_mapping(const Perm& p) {
  const int n = p.n();
  std::vector<int> diff(n), sum(n);
  for (int x = 0; x < n; ++x) {
    diff[x] = ((p(x) - x) % n + n) % n;
    sum[x] = (p(x) + x) % n;
  }
  MappingClass mc;
  mc.is_orthomorphism = is_bijection_of_zn(diff, n);
  mc.is_complete = is_bijection_of_zn(sum, n);
  mc.is_strong_complete = mc.is_orthomorphism && mc.is_complete;
  return mc;
}

std::optional<Perm> existence_scan(int n, MappingKind kind,
                                   long long node_budget) {
  if (n < 1) throw EmptyInput("existence_scan: n must be >= 1");
  const bool need_diff =
      kind == MappingKind::Orthomorphism || kind == MappingKind::StrongComplete;
  const bool need_sum =
      kind == MappingKind::Complete || kind == MappingKind::StrongComplete;

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0), used_diff(n, 0), used_sum(n, 0);
  long long nodes = 0;

  // depth-first over img[0..n-1], ascending value order
  std::vector<int> next_value(n, 0);
  int x = 0;
  while (x >= 0) {
    if (x == n) return Perm::make(img);
    bool advanced = false;
    for (int v = next_value[x]; v < n; ++v) {
      if (used[v]) continue;
      const int d = ((v - x) % n + n) % n;
      const int s = (v + x) % n;
      if (need_diff && used_diff[d]) continue;
      if (need_sum && used_sum[s]) continue;
      if (node_budget > 0 && ++nodes > node_budget)
        throw BudgetExceeded("existence_scan: node budget exhausted");
      img[x] = v;
      used[v] = 1;
      if (need_diff) used_diff[d] = 1;
      if (need_sum) used_sum[s] = 1;
      next_value[x] = v + 1;
      ++x;
      if (x < n) next_value[x] = 0;
      advanced = true;
      break;
    }
    if (advanced) {
      if (x == n) return Perm::make(img);
      continue;
    }
    // backtrack
    next_value[x] = 0;
    --x;
    if (x >= 0) {
      const int v = img[x];
      used[v] = 0;
      if (need_diff) used_diff[((v - x) % n + n) % n] = 0;
      if (need_sum) used_sum[(v + x) % n] = 0;
      img[x] = -1;
    }
  }
  return std::nullopt;
}

int carry_count(const Perm& p) {
  const int n = p.n();
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (i + p(i) >= n) ++count;
  return count;
}

}  // namespace circsort
