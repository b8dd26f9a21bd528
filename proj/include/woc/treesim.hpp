#pragma once

// Level-by-level growth of the restricted generating tree.
//
// Level 1 holds the single chain x1. At level j every active chain of level
// j-1 receives its 2l+1 children; a child that contains the stopping pattern
// becomes an inactive leaf (it is never expanded), the others stay active.

#include "woc/core.hpp"
#include "woc/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace woc::treesim {

/// Per-level leaf counts. Index j-1 holds level j.
struct LeafTally {
  int n_max = 0;
  std::vector<BigInt> a;      // active leaves
  std::vector<BigInt> delta;  // leaves that became inactive at this level
  std::vector<BigInt> b;      // cumulative inactive leaves
  std::vector<BigInt> w;      // a + b

  /// Builds b and w from the active and newly-inactive counts.
  static LeafTally from_counts(std::vector<BigInt> a, std::vector<BigInt> delta);

  const BigInt& a_at(int level) const { return a.at(static_cast<std::size_t>(level - 1)); }
  const BigInt& delta_at(int level) const { return delta.at(static_cast<std::size_t>(level - 1)); }
  const BigInt& b_at(int level) const { return b.at(static_cast<std::size_t>(level - 1)); }
  const BigInt& w_at(int level) const { return w.at(static_cast<std::size_t>(level - 1)); }

  friend bool operator==(const LeafTally&, const LeafTally&) = default;
};

struct Options {
  /// Largest number of active chains allowed at any level.
  std::uint64_t frontier_cap = 100'000'000;
  /// Worker threads for level expansion; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

LeafTally tally(const StoppingPattern& p, int n_max, const Options& opts = {});

/// Counts for the subtree below `root` (which must avoid `p`), covering
/// levels root.size()..n_max. The root itself is counted as active at its
/// level; lower levels of the returned tally are zero.
LeafTally tally_subtree(const WeakOrderChain& root, const StoppingPattern& p, int n_max,
                        const Options& opts = {});

/// Adds per-level counts (levels must match).
LeafTally combine(const LeafTally& lhs, const LeafTally& rhs);

enum class LeafKind {
  Active,       // active chains at level n
  InactiveAtN,  // chains that became inactive exactly at level n
  Inactive,     // every inactive leaf of the order-n tree, by level
};

/// Streams leaves in deterministic child order.
void for_each_leaf(const StoppingPattern& p, int n, LeafKind kind,
                   const std::function<void(const WeakOrderChain&)>& sink,
                   const Options& opts = {});

std::vector<WeakOrderChain> enumerate_leaves(const StoppingPattern& p, int n, LeafKind kind,
                                             const Options& opts = {});

/// Independent reference: classifies every ordered partition of [j], j <= n,
/// by brute-force tuple search. Throws ResourceLimitError for n > 8.
LeafTally oracle_tally(const StoppingPattern& p, int n);

inline constexpr int kOracleMaxN = 8;

}  // namespace woc::treesim
