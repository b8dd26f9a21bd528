#include "woc/bijections.hpp"

#include "woc/errors.hpp"

#include <algorithm>
#include <charconv>

namespace woc::bijections {

namespace {

const StoppingPattern& weak_pattern() {
  static const StoppingPattern p({Relation::Le, Relation::Le});
  return p;
}

const StoppingPattern& mixed_pattern() {
  static const StoppingPattern p({Relation::Le, Relation::Lt});
  return p;
}

/// Why `word` is not a Dyck path, or empty if it is.
std::string dyck_problem(std::string_view word, std::size_t& where) {
  if (word.empty()) {
    where = 0;
    return "empty path";
  }
  int height = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    where = i;
    if (word[i] == 'U') ++height;
    else if (word[i] == 'D') --height;
    else return "expected U or D";
    if (height < 0) return "path goes below the axis";
  }
  where = word.size();
  if (height != 0) return "path is not balanced";
  return {};
}

/// East steps strictly before 1-based position `pos`.
int downs_before(const std::string& w, int pos) {
  return static_cast<int>(std::count(w.begin(), w.begin() + (pos - 1), 'D'));
}

}  // namespace

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
  std::size_t where = 0;
  if (auto problem = dyck_problem(word_, where); !problem.empty())
    throw PreconditionError(problem + ": " + word_);
}

DyckPath DyckPath::parse(std::string_view text) {
  std::size_t where = 0;
  if (auto problem = dyck_problem(text, where); !problem.empty()) throw ParseError(where, problem);
  return DyckPath(std::string(text));
}

std::vector<DyckPath> all_dyck_paths(int n) {
  if (n < 1) throw PreconditionError("semilength must be >= 1");
  std::vector<DyckPath> out;
  std::string w;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (downs == n) {
      out.emplace_back(w);
      return;
    }
    if (ups < n) {
      w.push_back('U');
      self(self, ups + 1, downs);
      w.pop_back();
    }
    if (downs < ups) {
      w.push_back('D');
      self(self, ups, downs + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> sites(const DyckPath& p, Variant variant) {
  const std::string& w = p.word();
  auto at = [&](std::size_t k, std::string_view s) { return w.compare(k, s.size(), s) == 0; };
  std::vector<int> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    bool hit = false;
    switch (variant) {
      case Variant::Sec3: hit = at(k, "DU") || at(k, "DDD"); break;
      case Variant::Sec4: hit = at(k, "UDD"); break;
      case Variant::Sec5: hit = at(k, "DU"); break;
    }
    if (hit) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

ColoredDyckPath::ColoredDyckPath(DyckPath path, Variant variant, std::vector<int> marked)
    : path_(std::move(path)), variant_(variant), marked_(std::move(marked)) {
  std::sort(marked_.begin(), marked_.end());
  if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end())
    throw PreconditionError("site marked twice");
  const auto valid = sites(path_, variant_);
  for (int s : marked_)
    if (!std::binary_search(valid.begin(), valid.end(), s))
      throw PreconditionError("no colorable site at position " + std::to_string(s));
}

ColoredDyckPath ColoredDyckPath::parse(std::string_view text, Variant variant) {
  const auto open = text.find('[');
  const DyckPath path = DyckPath::parse(text.substr(0, open));
  std::vector<int> marked;
  if (open != std::string_view::npos) {
    std::size_t i = open + 1;
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{}) throw ParseError(i, "expected site index");
        i = static_cast<std::size_t>(ptr - text.data());
        marked.push_back(v);
        if (i >= text.size()) throw ParseError(i, "expected ']'");
        if (text[i] == ']') {
          ++i;
          break;
        }
        if (text[i] != ',') throw ParseError(i, "expected ',' or ']'");
        ++i;
      }
    }
    if (i != text.size()) throw ParseError(i, "trailing characters");
  }
  try {
    return ColoredDyckPath(path, variant, std::move(marked));
  } catch (const PreconditionError& e) {
    throw ParseError(open, e.what());
  }
}

std::string ColoredDyckPath::to_string() const {
  std::string s = path_.word() + "[";
  for (std::size_t i = 0; i < marked_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(marked_[i]);
  }
  return s + "]";
}

std::vector<ColoredDyckPath> all_colorings(Variant variant, int n) {
  std::vector<ColoredDyckPath> out;
  for (const auto& p : all_dyck_paths(n)) {
    const auto s = sites(p, variant);
    const std::size_t k = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> marked;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) marked.push_back(s[i]);
      out.emplace_back(p, variant, std::move(marked));
    }
  }
  return out;
}

BigInt weighted_count(Variant variant, int n) {
  if (n < 1) throw PreconditionError("semilength must be >= 1");
  if (n > kWeightedCountMaxN)
    throw ResourceLimitError("weighted_count enumerates paths only up to n = " +
                             std::to_string(kWeightedCountMaxN));
  BigInt total = 0;
  for (const auto& p : all_dyck_paths(n)) total += pow2(static_cast<int>(sites(p, variant).size()));
  return total;
}

// ---------------------------------------------------------------------------
// Dyck paths and 321-avoiders

Permutation dyck_to_321avoider(const DyckPath& p) {
  const std::string& w = p.word();
  const int n = p.semilength();
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  int ups = 0, downs = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 'U') {
      ++ups;
      continue;
    }
    if (k > 0 && w[k - 1] == 'U') {
      sigma[static_cast<std::size_t>(downs)] = ups;
      used[static_cast<std::size_t>(ups)] = true;
    }
    ++downs;
  }
  int next = 1;
  for (int& v : sigma) {
    if (v) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    v = next++;
  }
  return Permutation(std::move(sigma));
}

DyckPath avoider321_to_dyck(const Permutation& sigma) {
  if (contains_perm_pattern(sigma, Permutation({3, 2, 1})))
    throw PreconditionError("permutation contains 321: " + sigma.to_string());
  const int n = sigma.size();
  std::vector<std::pair<int, int>> maxima;  // (position, value)
  for (int i = 1; i <= n; ++i)
    if (maxima.empty() || sigma.at(i) > maxima.back().second) maxima.emplace_back(i, sigma.at(i));
  std::string w;
  int height = 0;
  for (std::size_t k = 0; k < maxima.size(); ++k) {
    const auto [pos, value] = maxima[k];
    w.append(static_cast<std::size_t>(value - height), 'U');
    height = value;
    const int next = k + 1 < maxima.size() ? maxima[k + 1].first : n + 1;
    w.append(static_cast<std::size_t>(next - pos), 'D');
  }
  return DyckPath(std::move(w));
}

// ---------------------------------------------------------------------------
// Colored paths and active chains

WeakOrderChain prop41_decode(const ColoredDyckPath& cp) {
  if (cp.variant() != Variant::Sec4) throw PreconditionError("prop41_decode needs UDD colorings");
  std::vector<int> bridges;
  // The orange UDD starting at column x ties the entries in columns x+1, x+2.
  for (int s : cp.marked()) bridges.push_back(downs_before(cp.path().word(), s) + 1);
  const UnderlinedPermutation u(dyck_to_321avoider(cp.path()), std::move(bridges), BlockLayout::Free);
  return underlined_to_chain(complement(u));
}

ColoredDyckPath prop41_encode(const WeakOrderChain& c) {
  if (contains_pattern(c, weak_pattern()))
    throw PreconditionError("chain contains <=,<= : " + format_chain(c));
  const auto u = complement(chain_to_underlined(c, BlockLayout::MinFirst));
  DyckPath path = avoider321_to_dyck(u.perm());
  const auto candidates = sites(path, Variant::Sec4);
  std::vector<int> marked;
  for (int b : u.bridges()) {
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](int s) { return downs_before(path.word(), s) + 1 == b; });
    if (it == candidates.end())
      throw ConsistencyError("no UDD under bridge " + std::to_string(b) + " for " + format_chain(c));
    marked.push_back(*it);
  }
  return ColoredDyckPath(std::move(path), Variant::Sec4, std::move(marked));
}

WeakOrderChain prop51_decode(const ColoredDyckPath& cp) {
  if (cp.variant() != Variant::Sec5) throw PreconditionError("prop51_decode needs valley markings");
  std::vector<int> bridges;
  // A valley at lattice point (x, y) sits between columns x and x+1.
  for (int s : cp.marked()) bridges.push_back(downs_before(cp.path().word(), s) + 1);
  const UnderlinedPermutation u(dyck_to_321avoider(cp.path()), std::move(bridges), BlockLayout::Free);
  return underlined_to_chain(reverse(u));
}

ColoredDyckPath prop51_encode(const WeakOrderChain& c) {
  if (contains_pattern(c, mixed_pattern()))
    throw PreconditionError("chain contains <=,< : " + format_chain(c));
  const auto u = reverse(chain_to_underlined(c, BlockLayout::Decreasing));
  DyckPath path = avoider321_to_dyck(u.perm());
  const auto candidates = sites(path, Variant::Sec5);
  std::vector<int> marked;
  for (int b : u.bridges()) {
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](int s) { return downs_before(path.word(), s) + 1 == b; });
    if (it == candidates.end())
      throw ConsistencyError("no valley under bridge " + std::to_string(b) + " for " + format_chain(c));
    marked.push_back(*it);
  }
  return ColoredDyckPath(std::move(path), Variant::Sec5, std::move(marked));
}

// ---------------------------------------------------------------------------
// Right-to-left maxima

std::vector<int> rl_maxima_positions(const Permutation& sigma) {
  std::vector<int> out;
  int best = 0;
  for (int i = sigma.size(); i >= 1; --i)
    if (sigma.at(i) > best) {
      best = sigma.at(i);
      out.push_back(i);
    }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct Skeleton {
  std::vector<int> entries;  // 0 where the entry is not a maximum
  std::vector<int> free_values;
};

Skeleton maxima_skeleton(const Permutation& sigma) {
  const int n = sigma.size();
  Skeleton s;
  s.entries.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int pos : rl_maxima_positions(sigma)) {
    s.entries[static_cast<std::size_t>(pos - 1)] = sigma.at(pos);
    used[static_cast<std::size_t>(sigma.at(pos))] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) s.free_values.push_back(v);
  return s;
}

}  // namespace

Permutation to_213_avoider_same_rl_maxima(const Permutation& sigma) {
  auto [entries, free_values] = maxima_skeleton(sigma);
  // Right to left: each gap takes the largest free value below the maximum
  // that closes it.
  int bound = 0;
  for (std::size_t i = entries.size(); i-- > 0;) {
    if (entries[i]) {
      bound = entries[i];
      continue;
    }
    auto it = std::lower_bound(free_values.begin(), free_values.end(), bound);
    if (it == free_values.begin()) throw ConsistencyError("no value left for position " + std::to_string(i + 1));
    --it;
    entries[i] = *it;
    free_values.erase(it);
  }
  return Permutation(std::move(entries));
}

Permutation to_123_avoider_same_rl_maxima(const Permutation& sigma) {
  auto [entries, free_values] = maxima_skeleton(sigma);
  auto next = free_values.rbegin();
  for (int& v : entries)
    if (!v) v = *next++;
  return Permutation(std::move(entries));
}

// ---------------------------------------------------------------------------
// phi

namespace {

/// For every bridged run, the second smallest entry and the run's end.
template <class F>
void for_each_run_threshold(const UnderlinedPermutation& u, F&& f) {
  for (auto [first, last] : u.runs()) {
    if (first == last) continue;
    int lo1 = u.perm().size() + 1, lo2 = lo1;
    for (int i = first; i <= last; ++i) {
      const int v = u.perm().at(i);
      if (v < lo1) {
        lo2 = lo1;
        lo1 = v;
      } else if (v < lo2) {
        lo2 = v;
      }
    }
    f(lo2, last);
  }
}

int position_of(const std::vector<int>& e, int value) {
  return static_cast<int>(std::find(e.begin(), e.end(), value) - e.begin());
}

}  // namespace

bool contains_underlined_213(const UnderlinedPermutation& u) {
  bool found = false;
  for_each_run_threshold(u, [&](int threshold, int last) {
    for (int i = last + 1; i <= u.perm().size() && !found; ++i) found = u.perm().at(i) > threshold;
  });
  return found;
}

bool underlined_213_ends_at_max(const UnderlinedPermutation& u) {
  const int n = u.perm().size();
  bool found = false;
  for_each_run_threshold(u, [&](int, int last) {
    for (int i = last + 1; i <= n && !found; ++i) found = u.perm().at(i) == n;
  });
  return found;
}

UnderlinedPermutation phi(const WeakOrderChain& c) {
  const int n = c.size();
  if (n < 3 || !contains_pattern(c, mixed_pattern()) ||
      contains_pattern(c.restrict_to(n - 1), mixed_pattern()))
    throw PreconditionError("chain is not newly inactive for <=,< : " + format_chain(c));

  const auto sigma = chain_to_underlined(c, BlockLayout::Decreasing);
  std::vector<int> e(sigma.perm().entries().begin(), sigma.perm().entries().end());
  const int at_n = position_of(e, n);
  const int at_prev = position_of(e, n - 1);
  if (at_prev > at_n) throw ConsistencyError("n-1 right of n in " + sigma.to_string());

  if (at_prev + 1 == at_n) {
    // sigma_0 (n-1) n ...  becomes  (n-1) sigma_0 n ...
    if (at_prev == 0) throw ConsistencyError("empty decreasing prefix in " + sigma.to_string());
    std::rotate(e.begin(), e.begin() + at_prev, e.begin() + at_n);
  }

  std::vector<int> reduced = e;
  reduced.erase(reduced.begin() + at_n);
  const Permutation tau = to_213_avoider_same_rl_maxima(Permutation(std::move(reduced)));
  std::vector<int> out(tau.entries().begin(), tau.entries().end());
  out.insert(out.begin() + at_n, n);
  return UnderlinedPermutation(Permutation(std::move(out)), sigma.bridges(), BlockLayout::Free);
}

WeakOrderChain phi_inverse(const UnderlinedPermutation& u) {
  const int n = u.perm().size();
  if (n < 3) throw PreconditionError("not an image of phi: " + u.to_string());
  std::vector<int> e(u.perm().entries().begin(), u.perm().entries().end());
  const int at_n = position_of(e, n);
  std::vector<int> reduced = e;
  reduced.erase(reduced.begin() + at_n);
  const Permutation back = to_123_avoider_same_rl_maxima(Permutation(std::move(reduced)));
  e.assign(back.entries().begin(), back.entries().end());
  e.insert(e.begin() + at_n, n);

  // (n-1) followed by an unbridged decreasing run up to n can only come from
  // the adjacent case.
  bool moved = e[0] == n - 1 && at_n >= 2;
  for (int i = 1; moved && i < at_n; ++i) moved = e[static_cast<std::size_t>(i)] < e[static_cast<std::size_t>(i - 1)];
  for (int b : u.bridges()) moved = moved && b > at_n;
  if (moved) std::rotate(e.begin(), e.begin() + 1, e.begin() + at_n);

  WeakOrderChain c = underlined_to_chain(
      UnderlinedPermutation(Permutation(std::move(e)), u.bridges(), BlockLayout::Decreasing));
  if (!(phi(c) == u)) throw PreconditionError("not an image of phi: " + u.to_string());
  return c;
}

}  // namespace woc::bijections
