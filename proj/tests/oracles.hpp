#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's counting, series or containment code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline void for_each_perm(int n, const std::function<void(const Perm&)>& f) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do f(p);
  while (std::next_permutation(p.begin(), p.end()));
}

/// Subsequence search over all index tuples.
inline bool contains(const Perm& p, const Perm& pat) {
  const int n = static_cast<int>(p.size()), m = static_cast<int>(pat.size());
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::function<bool(int, int)> rec = [&](int depth, int from) {
    if (depth == m) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if ((pat[a] < pat[b]) != (p[idx[a]] < p[idx[b]])) return false;
      return true;
    }
    for (int i = from; i < n; ++i) {
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline int descents(const Perm& p) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
  return d;
}

inline Perm without_max(const Perm& p) {
  Perm r;
  const int n = static_cast<int>(p.size());
  for (int v : p)
    if (v != n) r.push_back(v);
  return r;
}

/// |{ sigma in S_n : avoids 123, d descents }|
inline std::int64_t e123(int n, int d) {
  std::int64_t c = 0;
  for_each_perm(n, [&](const Perm& p) { c += !contains(p, {1, 2, 3}) && descents(p) == d; });
  return c;
}

/// |{ sigma in S_n : contains pat, d descents, reduction avoids pat }|
inline std::int64_t g_set(int n, int d, const Perm& pat) {
  std::int64_t c = 0;
  for_each_perm(n, [&](const Perm& p) {
    c += descents(p) == d && contains(p, pat) && !contains(without_max(p), pat);
  });
  return c;
}

/// Balanced U/D words of length 2n by number of valleys (DU).
inline std::vector<std::int64_t> dyck_by_valleys(int n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    int h = 0, valleys = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const bool up = mask >> i & 1;
      h += up ? 1 : -1;
      ok = h >= 0;
      if (i > 0 && up && !(mask >> (i - 1) & 1)) ++valleys;
    }
    if (ok && h == 0) ++out[static_cast<std::size_t>(valleys)];
  }
  return out;
}

/// Ordered partitions of [n] as surjections onto {0..k-1}.
inline std::int64_t ordered_partitions(int n) {
  std::int64_t count = 0;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      const int k = n ? *std::max_element(v.begin(), v.end()) + 1 : 0;
      std::vector<bool> hit(static_cast<std::size_t>(k), false);
      for (int x : v) hit[static_cast<std::size_t>(x)] = true;
      count += std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      return;
    }
    for (int x = 0; x < n; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
