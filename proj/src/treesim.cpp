#include "woc/treesim.hpp"

#include "woc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace woc::treesim {

LeafTally LeafTally::from_counts(std::vector<BigInt> a, std::vector<BigInt> delta) {
  if (a.size() != delta.size()) throw PreconditionError("tally columns differ in length");
  LeafTally t;
  t.n_max = static_cast<int>(a.size());
  t.b.resize(a.size());
  t.w.resize(a.size());
  BigInt acc = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    acc += delta[j];
    t.b[j] = acc;
    t.w[j] = a[j] + acc;
  }
  t.a = std::move(a);
  t.delta = std::move(delta);
  return t;
}

LeafTally combine(const LeafTally& lhs, const LeafTally& rhs) {
  if (lhs.n_max != rhs.n_max) throw PreconditionError("cannot combine tallies of different depth");
  std::vector<BigInt> a(lhs.a.size()), d(lhs.a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = lhs.a[j] + rhs.a[j];
    d[j] = lhs.delta[j] + rhs.delta[j];
  }
  return LeafTally::from_counts(std::move(a), std::move(d));
}

namespace {

constexpr int kMaxLevel = 64;
constexpr std::size_t kMinChunk = 2048;

/// Chains of one level packed as value vectors of equal width.
struct Frontier {
  int width = 0;
  std::vector<std::uint8_t> vals;
  std::vector<std::uint8_t> nblocks;

  std::size_t size() const { return nblocks.size(); }
  std::span<const std::uint8_t> chain(std::size_t i) const {
    return {vals.data() + i * static_cast<std::size_t>(width), static_cast<std::size_t>(width)};
  }
  void push(std::span<const std::uint8_t> v, std::uint8_t k) {
    vals.insert(vals.end(), v.begin(), v.end());
    nblocks.push_back(k);
  }
  void append(Frontier&& other) {
    vals.insert(vals.end(), other.vals.begin(), other.vals.end());
    nblocks.insert(nblocks.end(), other.nblocks.begin(), other.nblocks.end());
  }
  WeakOrderChain to_chain(std::size_t i) const {
    auto v = chain(i);
    std::vector<int> values(v.begin(), v.end());
    return WeakOrderChain::from_values(values);
  }
};

Frontier single(const WeakOrderChain& c) {
  Frontier f;
  f.width = c.size();
  std::vector<std::uint8_t> v;
  for (int x : c.values()) v.push_back(static_cast<std::uint8_t>(x));
  f.push(v, static_cast<std::uint8_t>(c.block_count()));
  return f;
}

struct LevelResult {
  Frontier active;
  Frontier inactive;
  std::uint64_t n_active = 0;
  std::uint64_t n_inactive = 0;
};

void expand_range(const Frontier& f, std::size_t begin, std::size_t end, const StoppingPattern& p,
                  bool keep_active, bool keep_inactive, std::uint64_t cap,
                  std::atomic<bool>& over_cap, LevelResult& out) {
  const int w = f.width;
  out.active.width = out.inactive.width = w + 1;
  std::vector<std::uint8_t> child(static_cast<std::size_t>(w) + 1);
  auto emit = [&](std::uint8_t k) {
    if (contains_pattern_ending_at_last(child, p)) {
      ++out.n_inactive;
      if (keep_inactive) out.inactive.push(child, k);
    } else {
      ++out.n_active;
      if (keep_active) out.active.push(child, k);
    }
  };
  for (std::size_t i = begin; i < end; ++i) {
    if ((i & 0x3ff) == 0 && over_cap.load(std::memory_order_relaxed)) return;
    const auto parent = f.chain(i);
    const std::uint8_t blocks = f.nblocks[i];
    for (std::uint8_t pos = 0; pos <= blocks; ++pos) {
      for (int j = 0; j < w; ++j) child[j] = parent[j] >= pos ? parent[j] + 1 : parent[j];
      child[w] = pos;
      emit(blocks + 1);
      if (pos == blocks) break;
      std::copy(parent.begin(), parent.end(), child.begin());
      child[w] = pos;
      emit(blocks);
    }
    if (out.n_active > cap) {
      over_cap = true;
      return;
    }
  }
}

unsigned worker_count(const Options& opts, std::size_t work) {
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  t = std::min(t, 16u);
  const auto by_size = static_cast<unsigned>(std::max<std::size_t>(1, work / kMinChunk));
  return std::max(1u, std::min(t, by_size));
}

/// Expands every chain of `f`; chunk outputs are concatenated in order so
/// the result does not depend on the schedule.
LevelResult expand(const Frontier& f, const StoppingPattern& p, bool keep_active,
                   bool keep_inactive, const Options& opts) {
  const unsigned workers = worker_count(opts, f.size());
  std::vector<LevelResult> parts(workers);
  std::atomic<bool> over_cap{false};
  const std::size_t chunk = (f.size() + workers - 1) / workers;
  auto run = [&](unsigned k) {
    const std::size_t b = std::min(f.size(), k * chunk);
    const std::size_t e = std::min(f.size(), b + chunk);
    expand_range(f, b, e, p, keep_active, keep_inactive, opts.frontier_cap, over_cap, parts[k]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run, k);
  }

  LevelResult out;
  out.active.width = out.inactive.width = f.width + 1;
  for (auto& part : parts) {
    out.n_active += part.n_active;
    out.n_inactive += part.n_inactive;
    out.active.append(std::move(part.active));
    out.inactive.append(std::move(part.inactive));
  }
  if (over_cap || out.n_active > opts.frontier_cap)
    throw ResourceLimitError("active frontier at level " + std::to_string(f.width + 1) +
                             " exceeds cap of " + std::to_string(opts.frontier_cap) + " chains");
  return out;
}

void check_level(int n) {
  if (n < 1) throw PreconditionError("level must be >= 1");
  if (n > kMaxLevel) throw PreconditionError("level exceeds supported maximum of 64");
}

}  // namespace

LeafTally tally_subtree(const WeakOrderChain& root, const StoppingPattern& p, int n_max,
                        const Options& opts) {
  check_level(n_max);
  const int start = root.size();
  if (start > n_max) throw PreconditionError("root is deeper than n_max");
  if (contains_pattern(root, p)) throw PreconditionError("subtree root must avoid the pattern");

  std::vector<BigInt> a(static_cast<std::size_t>(n_max)), delta(static_cast<std::size_t>(n_max));
  a[static_cast<std::size_t>(start - 1)] = 1;
  Frontier frontier = single(root);
  for (int level = start + 1; level <= n_max; ++level) {
    const bool last = level == n_max;
    LevelResult r = expand(frontier, p, !last, false, opts);
    a[static_cast<std::size_t>(level - 1)] = r.n_active;
    delta[static_cast<std::size_t>(level - 1)] = r.n_inactive;
    frontier = std::move(r.active);
  }
  return LeafTally::from_counts(std::move(a), std::move(delta));
}

LeafTally tally(const StoppingPattern& p, int n_max, const Options& opts) {
  return tally_subtree(WeakOrderChain(std::vector<std::vector<int>>{{1}}), p, n_max, opts);
}

void for_each_leaf(const StoppingPattern& p, int n, LeafKind kind,
                   const std::function<void(const WeakOrderChain&)>& sink, const Options& opts) {
  check_level(n);
  Frontier frontier = single(WeakOrderChain(std::vector<std::vector<int>>{{1}}));
  if (n == 1) {
    if (kind == LeafKind::Active) sink(frontier.to_chain(0));
    return;
  }
  for (int level = 2; level <= n; ++level) {
    const bool last = level == n;
    const bool want_inactive = kind == LeafKind::Inactive || (last && kind == LeafKind::InactiveAtN);
    LevelResult r = expand(frontier, p, !last || kind == LeafKind::Active, want_inactive, opts);
    if (want_inactive)
      for (std::size_t i = 0; i < r.inactive.size(); ++i) sink(r.inactive.to_chain(i));
    if (last && kind == LeafKind::Active)
      for (std::size_t i = 0; i < r.active.size(); ++i) sink(r.active.to_chain(i));
    frontier = std::move(r.active);
  }
}

std::vector<WeakOrderChain> enumerate_leaves(const StoppingPattern& p, int n, LeafKind kind,
                                             const Options& opts) {
  std::vector<WeakOrderChain> out;
  for_each_leaf(p, n, kind, [&](const WeakOrderChain& c) { out.push_back(c); }, opts);
  return out;
}

// ---------------------------------------------------------------------------
// Oracle: no tree, no pruning, no incremental check.

namespace {

bool relation_holds(Relation r, int a, int b) {
  switch (r) {
    case Relation::Lt: return a < b;
    case Relation::Le: return a <= b;
    case Relation::Eq: return a == b;
  }
  return false;
}

/// Tries every increasing index tuple of length m among the first `len`
/// variables.
bool brute_contains(const std::vector<int>& values, int len, const StoppingPattern& p) {
  const auto rels = p.relations();
  const int m = static_cast<int>(p.arity());
  std::vector<int> idx(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int depth, int from) -> bool {
    if (depth == m) {
      for (int t = 0; t + 1 < m; ++t)
        if (!relation_holds(rels[static_cast<std::size_t>(t)], values[static_cast<std::size_t>(idx[t])],
                            values[static_cast<std::size_t>(idx[t + 1])]))
          return false;
      return true;
    }
    for (int i = from; i < len; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

/// Calls f(values) for every ordered partition of [n]: a set partition as a
/// restricted growth string, then every ordering of its blocks.
template <class F>
void for_each_ordered_partition(int n, F&& f) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> values(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      std::vector<int> order(static_cast<std::size_t>(blocks));
      for (int k = 0; k < blocks; ++k) order[static_cast<std::size_t>(k)] = k;
      do {
        for (int v = 0; v < n; ++v)
          values[static_cast<std::size_t>(v)] = order[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])];
        f(values);
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

LeafTally oracle_tally(const StoppingPattern& p, int n) {
  if (n < 1) throw PreconditionError("level must be >= 1");
  if (n > kOracleMaxN)
    throw ResourceLimitError("oracle enumeration is limited to n <= " + std::to_string(kOracleMaxN));

  std::vector<BigInt> a(static_cast<std::size_t>(n)), delta(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::uint64_t active = 0, fresh = 0;
    for_each_ordered_partition(j, [&](const std::vector<int>& values) {
      // First level at which some prefix of the variables contains p.
      int first = 0;
      for (int len = 1; len <= j && first == 0; ++len)
        if (brute_contains(values, len, p)) first = len;
      if (first == 0)
        ++active;
      else if (first == j)
        ++fresh;
    });
    a[static_cast<std::size_t>(j - 1)] = active;
    delta[static_cast<std::size_t>(j - 1)] = fresh;
  }
  return LeafTally::from_counts(std::move(a), std::move(delta));
}

}  // namespace woc::treesim
