#pragma once

// Weak-ordering chains, stopping patterns and the permutation views used to
// reason about them.
//
// Variables are 1-based (x1..xn). A chain stores its ordered partition:
// blocks are listed from the smallest value group to the largest, and the
// value of a variable is the 0-based index of its block.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace woc {

enum class Relation : std::uint8_t { Lt, Le, Eq };

std::string_view relation_symbol(Relation r);

/// A relation chain x_{i1} r1 x_{i2} r2 ... x_{im} over increasing indices.
class StoppingPattern {
 public:
  explicit StoppingPattern(std::vector<Relation> relations);

  /// Accepts comma-separated relations: "<", "<=", "=" (e.g. "<=,<").
  static StoppingPattern parse(std::string_view text);

  std::size_t arity() const noexcept { return relations_.size() + 1; }
  std::span<const Relation> relations() const noexcept { return relations_; }
  std::string to_string() const;

  friend bool operator==(const StoppingPattern&, const StoppingPattern&) = default;

 private:
  std::vector<Relation> relations_;
};

class WeakOrderChain {
 public:
  /// Blocks in value order. Indices within a block may be given in any
  /// order; they are stored ascending. Throws PreconditionError unless the
  /// blocks partition {1..n} into nonempty parts.
  explicit WeakOrderChain(std::vector<std::vector<int>> blocks);

  /// values[i] is the block index of variable i+1. Block indices must
  /// cover 0..k-1 for some k.
  static WeakOrderChain from_values(std::span<const int> values);

  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  std::vector<int> values() const;
  int value_of(int var) const;

  /// Induced chain on the variables 1..m.
  WeakOrderChain restrict_to(int m) const;

  friend bool operator==(const WeakOrderChain&, const WeakOrderChain&) = default;
  friend auto operator<=>(const WeakOrderChain& a, const WeakOrderChain& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  WeakOrderChain(int n, std::vector<std::vector<int>> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// The 2l+1 chains obtained by inserting x_{n+1}: for each position left to
/// right, first the gap (new singleton block) and then the block (tie).
std::vector<WeakOrderChain> children(const WeakOrderChain& c);

bool contains_pattern(const WeakOrderChain& c, const StoppingPattern& p);

/// Value-vector kernels used by the tree simulator. `values[i]` is the
/// block index of variable i+1.
bool contains_pattern(std::span<const std::uint8_t> values, const StoppingPattern& p);

/// True iff an occurrence of `p` uses the last variable as its final index.
bool contains_pattern_ending_at_last(std::span<const std::uint8_t> values,
                                     const StoppingPattern& p);

std::string format_chain(const WeakOrderChain& c);

/// Grammar: `x2<x4=x5<x1<x3`, or the partition form `2|54|1|3`
/// (comma-separated indices inside a block when any index exceeds 9).
WeakOrderChain parse_chain(std::string_view text);

class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);
  static Permutation identity(int n);
  /// One-line notation: "3162475", or comma separated ("10,2,1,...").
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based position.
  int at(int pos) const { return entries_.at(static_cast<std::size_t>(pos - 1)); }
  std::span<const int> entries() const noexcept { return entries_; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

Permutation complement(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation inverse(const Permutation& p);
/// 1-based positions i with p(i) > p(i+1).
std::vector<int> descents(const Permutation& p);
bool contains_perm_pattern(const Permutation& p, const Permutation& pattern);

/// How entries of one block are laid out inside a bridged run.
enum class BlockLayout : std::uint8_t {
  Decreasing,  // every run strictly decreasing
  MinFirst,    // minimum first, remaining entries decreasing
  Free,        // no constraint (images of complement/reverse)
};

/// Permutation with bridges: bridge i ties positions i and i+1 to one block.
class UnderlinedPermutation {
 public:
  UnderlinedPermutation(Permutation perm, std::vector<int> bridges, BlockLayout layout);

  /// Runs in brackets: "2[54]13".
  static UnderlinedPermutation parse(std::string_view text, BlockLayout layout);

  const Permutation& perm() const noexcept { return perm_; }
  const std::vector<int>& bridges() const noexcept { return bridges_; }
  BlockLayout layout() const noexcept { return layout_; }
  bool has_bridge(int pos) const;

  /// Maximal bridged runs as [first, last] 1-based positions.
  std::vector<std::pair<int, int>> runs() const;

  std::string to_string() const;

  /// Equality ignores the layout tag.
  friend bool operator==(const UnderlinedPermutation& a, const UnderlinedPermutation& b) {
    return a.perm_ == b.perm_ && a.bridges_ == b.bridges_;
  }

 private:
  Permutation perm_;
  std::vector<int> bridges_;
  BlockLayout layout_;
};

UnderlinedPermutation chain_to_underlined(const WeakOrderChain& c, BlockLayout layout);
WeakOrderChain underlined_to_chain(const UnderlinedPermutation& u);

/// Bridges stay at the same positions.
UnderlinedPermutation complement(const UnderlinedPermutation& u);
/// Bridge i moves to n-i.
UnderlinedPermutation reverse(const UnderlinedPermutation& u);

}  // namespace woc
