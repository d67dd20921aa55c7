#include "circsort/perm.hpp"

#include <algorithm>

namespace circsort {

Perm Perm::make(std::vector<int> images) {
  if (images.empty()) throw EmptyInput("permutation needs at least one image");
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw NotABijection("image value " + std::to_string(v) +
                          " out of range for n=" + std::to_string(n));
    if (seen[v])
      throw NotABijection("duplicate image value " + std::to_string(v));
    seen[v] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::identity(int n) {
  if (n < 1) throw EmptyInput("n must be >= 1");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < n(); ++x) inv[img_[x]] = x;
  return Perm(std::move(inv));
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.n() != q.n())
    throw ModulusMismatch("compose: moduli " + std::to_string(p.n()) +
                          " and " + std::to_string(q.n()));
  std::vector<int> img(p.n());
  for (int x = 0; x < p.n(); ++x) img[x] = p(q(x));
  return Perm::make(std::move(img));
}

Perm shift(const Perm& p, long long k) {
  const int n = p.n();
  int r = static_cast<int>(((k % n) + n) % n);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = p((x + r) % n);
  return Perm::make(std::move(img));
}

std::vector<std::vector<int>> cycle_decomposition(const Perm& p) {
  const int n = p.n();
  std::vector<char> visited(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    std::vector<int> cyc;
    int y = x;
    do {
      visited[y] = 1;
      cyc.push_back(y);
      y = p(y);
    } while (y != x);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

CycleType cycle_type(const Perm& p) {
  CycleType t;
  for (const auto& c : cycle_decomposition(p))
    t.parts.push_back(static_cast<int>(c.size()));
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

int cycle_count(const Perm& p) {
  const int n = p.n();
  std::vector<char> visited(n, 0);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (visited[x]) continue;
    ++count;
    for (int y = x; !visited[y]; y = p(y)) visited[y] = 1;
  }
  return count;
}

int transposition_distance(const Perm& p) { return p.n() - cycle_count(p); }

CosetProfile coset_profile(const Perm& p) {
  const int n = p.n();
  CosetProfile prof;
  prof.n = n;
  prof.shift_types.reserve(n);
  prof.fixed_counts.resize(n, 0);
  prof.min_nontrivial_cycle.resize(n);
  int max_cycles = 0;
  for (int k = 0; k < n; ++k) {
    Perm s = shift(p, k);
    CycleType t = cycle_type(s);
    int fixed = 0;
    std::optional<int> min_nt;
    for (int part : t.parts) {
      if (part == 1)
        ++fixed;
      else if (!min_nt || part < *min_nt)
        min_nt = part;
    }
    prof.fixed_counts[k] = fixed;
    prof.min_nontrivial_cycle[k] = min_nt;
    max_cycles = std::max(max_cycles, t.cycle_count());
    prof.shift_types.push_back(std::move(t));
  }
  prof.t_coset = n - max_cycles;
  return prof;
}

int t_coset(const Perm& p) {
  const int n = p.n();
  int max_cycles = 0;
  for (int k = 0; k < n; ++k)
    max_cycles = std::max(max_cycles, cycle_count(shift(p, k)));
  return n - max_cycles;
}

Perm normalize_zero(const Perm& p) {
  const int n = p.n();
  const int off = p(0);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = ((p(x) - off) % n + n) % n;
  return Perm::make(std::move(img));
}

}  // namespace circsort
