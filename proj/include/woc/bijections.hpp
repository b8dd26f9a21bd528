#pragma once

// Dyck paths with colored sites and their correspondences with active and
// newly inactive chains.
//
// A path of semilength n is a word over {U, D}; read as a lattice path from
// (0,0) to (n,n), U is a north step and D an east step. Sites are named by
// the 1-based start position of the subword that forms them.

#include "woc/core.hpp"
#include "woc/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace woc::bijections {

class DyckPath {
 public:
  /// Throws PreconditionError unless `word` is a nonempty balanced U/D word
  /// that never dips below the axis.
  explicit DyckPath(std::string word);
  /// Like the constructor, but reports bad input as ParseError.
  static DyckPath parse(std::string_view text);

  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }
  const std::string& word() const noexcept { return word_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string word_;
};

/// Every Dyck path of semilength n, in lexicographic order (U < D).
std::vector<DyckPath> all_dyck_paths(int n);

enum class Variant {
  Sec3,  // valleys DU and triple downs DDD
  Sec4,  // UDD
  Sec5,  // valleys DU
};

/// Start positions of the colorable sites of `variant`, ascending.
/// Overlapping DDD occurrences are distinct sites.
std::vector<int> sites(const DyckPath& p, Variant variant);

class ColoredDyckPath {
 public:
  /// `marked` must be a subset of sites(path, variant).
  ColoredDyckPath(DyckPath path, Variant variant, std::vector<int> marked);

  /// "UUDUDD[4]" or "UUDUDD[]"; a missing bracket means nothing is marked.
  static ColoredDyckPath parse(std::string_view text, Variant variant);

  const DyckPath& path() const noexcept { return path_; }
  Variant variant() const noexcept { return variant_; }
  const std::vector<int>& marked() const noexcept { return marked_; }
  std::string to_string() const;

  friend bool operator==(const ColoredDyckPath&, const ColoredDyckPath&) = default;
  friend auto operator<=>(const ColoredDyckPath&, const ColoredDyckPath&) = default;

 private:
  DyckPath path_;
  Variant variant_;
  std::vector<int> marked_;
};

/// Every coloring of every path of semilength n.
std::vector<ColoredDyckPath> all_colorings(Variant variant, int n);

/// Sum over paths of 2^{#sites}. ResourceLimitError for n > 14.
BigInt weighted_count(Variant variant, int n);
constexpr int kWeightedCountMaxN = 14;

/// Dots at NE-turns, remaining columns filled with increasing values.
Permutation dyck_to_321avoider(const DyckPath& p);
/// Inverse; PreconditionError unless `sigma` avoids 321.
DyckPath avoider321_to_dyck(const Permutation& sigma);

/// Colored UDD paths to chains avoiding <=,<= .
WeakOrderChain prop41_decode(const ColoredDyckPath& cp);
/// PreconditionError if `c` contains <=,<= .
ColoredDyckPath prop41_encode(const WeakOrderChain& c);

/// Valley-marked paths to chains avoiding <=,< .
WeakOrderChain prop51_decode(const ColoredDyckPath& cp);
/// PreconditionError if `c` contains <=,< .
ColoredDyckPath prop51_encode(const WeakOrderChain& c);

/// The 213-avoider with the same right-to-left maxima as `sigma`.
Permutation to_213_avoider_same_rl_maxima(const Permutation& sigma);
/// The 123-avoider with the same right-to-left maxima as `sigma`.
Permutation to_123_avoider_same_rl_maxima(const Permutation& sigma);
/// 1-based positions of the right-to-left maxima, ascending.
std::vector<int> rl_maxima_positions(const Permutation& sigma);

/// True iff two entries of one bridged run are followed later by an entry
/// larger than both. With decreasing runs this is a 21-underlined-3.
bool contains_underlined_213(const UnderlinedPermutation& u);
/// Same, restricted to occurrences whose final entry is the value n.
bool underlined_213_ends_at_max(const UnderlinedPermutation& u);

/// Chain newly inactive for <=,< at its own level, to a permutation with a
/// 213 pattern and 213-avoiding reduction, with some descents bridged.
/// PreconditionError unless the chain is newly inactive at level n.
UnderlinedPermutation phi(const WeakOrderChain& c);
/// PreconditionError if `u` is not an image of phi.
WeakOrderChain phi_inverse(const UnderlinedPermutation& u);

}  // namespace woc::bijections
