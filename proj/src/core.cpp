#include "woc/core.hpp"

#include "woc/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace woc {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// StoppingPattern

StoppingPattern::StoppingPattern(std::vector<Relation> relations)
    : relations_(std::move(relations)) {
  if (relations_.empty()) throw PreconditionError("stopping pattern needs arity >= 2");
}

StoppingPattern StoppingPattern::parse(std::string_view text) {
  std::vector<Relation> rels;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= text.size()) throw ParseError(i, "expected relation");
    if (text.substr(i, 2) == "<=") {
      rels.push_back(Relation::Le);
      i += 2;
    } else if (text.substr(i, 3) == "\xE2\x89\xA4") {  // U+2264
      rels.push_back(Relation::Le);
      i += 3;
    } else if (text[i] == '<') {
      rels.push_back(Relation::Lt);
      ++i;
    } else if (text[i] == '=') {
      rels.push_back(Relation::Eq);
      ++i;
    } else {
      throw ParseError(i, "expected one of <, <=, =");
    }
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(i, "expected ','");
    ++i;
  }
  return StoppingPattern(std::move(rels));
}

std::string StoppingPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (i) out += ',';
    out += relation_symbol(relations_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeakOrderChain

WeakOrderChain::WeakOrderChain(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw PreconditionError("chain blocks must be nonempty");
    std::sort(b.begin(), b.end());
    n += static_cast<int>(b.size());
  }
  if (n == 0) throw PreconditionError("chain must have at least one variable");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& b : blocks) {
    for (int v : b) {
      if (v < 1 || v > n) throw PreconditionError("variable index out of range 1..n");
      if (seen[static_cast<std::size_t>(v)]) throw PreconditionError("variable repeated in chain");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  n_ = n;
  blocks_ = std::move(blocks);
}

WeakOrderChain WeakOrderChain::from_values(std::span<const int> values) {
  if (values.empty()) throw PreconditionError("chain must have at least one variable");
  int k = *std::max_element(values.begin(), values.end()) + 1;
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < values.size(); ++i) {
    int v = values[i];
    if (v < 0) throw PreconditionError("negative block value");
    blocks[static_cast<std::size_t>(v)].push_back(static_cast<int>(i) + 1);
  }
  for (const auto& b : blocks)
    if (b.empty()) throw PreconditionError("block values must be contiguous");
  return WeakOrderChain(static_cast<int>(values.size()), std::move(blocks));
}

std::vector<int> WeakOrderChain::values() const {
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int var : blocks_[b]) v[static_cast<std::size_t>(var - 1)] = static_cast<int>(b);
  return v;
}

int WeakOrderChain::value_of(int var) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), var)) return static_cast<int>(b);
  throw PreconditionError("variable not in chain");
}

WeakOrderChain WeakOrderChain::restrict_to(int m) const {
  if (m < 1 || m > n_) throw PreconditionError("restriction size out of range");
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_) {
    std::vector<int> kept;
    for (int v : b)
      if (v <= m) kept.push_back(v);
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return WeakOrderChain(m, std::move(out));
}

std::vector<WeakOrderChain> children(const WeakOrderChain& c) {
  const int next = c.size() + 1;
  const auto& blocks = c.blocks();
  std::vector<WeakOrderChain> out;
  out.reserve(2 * blocks.size() + 1);
  for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
    std::vector<std::vector<int>> gap(blocks.begin(), blocks.end());
    gap.insert(gap.begin() + static_cast<std::ptrdiff_t>(pos), std::vector<int>{next});
    out.emplace_back(std::move(gap));
    if (pos == blocks.size()) break;
    std::vector<std::vector<int>> tie(blocks.begin(), blocks.end());
    tie[pos].push_back(next);
    out.emplace_back(std::move(tie));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Containment
//
// reach[i] after stage t: some occurrence of the first t+1 pattern entries
// ends at index i. O(m n^2).

namespace {

template <class T>
bool holds(Relation r, T a, T b) {
  switch (r) {
    case Relation::Lt: return a < b;
    case Relation::Le: return a <= b;
    case Relation::Eq: return a == b;
  }
  return false;
}

constexpr std::size_t kStackVars = 64;

template <class T>
bool match(std::span<const T> values, const StoppingPattern& p, bool last_only) {
  const std::size_t n = values.size();
  const auto rels = p.relations();
  if (p.arity() > n) return false;

  std::array<char, kStackVars> buf_a{}, buf_b{};
  std::vector<char> heap_a, heap_b;
  char* cur = buf_a.data();
  char* nxt = buf_b.data();
  if (n > kStackVars) {
    heap_a.assign(n, 0);
    heap_b.assign(n, 0);
    cur = heap_a.data();
    nxt = heap_b.data();
  }
  std::fill(cur, cur + n, char{1});

  for (std::size_t t = 0; t < rels.size(); ++t) {
    const bool final_stage = t + 1 == rels.size();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      nxt[i] = 0;
      if (final_stage && last_only && i + 1 != n) continue;
      for (std::size_t j = t; j < i; ++j) {
        if (cur[j] && holds(rels[t], values[j], values[i])) {
          nxt[i] = 1;
          break;
        }
      }
      any = any || nxt[i];
    }
    if (!any) return false;
    std::swap(cur, nxt);
  }
  return true;
}

}  // namespace

bool contains_pattern(std::span<const std::uint8_t> values, const StoppingPattern& p) {
  return match(values, p, false);
}

bool contains_pattern_ending_at_last(std::span<const std::uint8_t> values,
                                     const StoppingPattern& p) {
  return match(values, p, true);
}

bool contains_pattern(const WeakOrderChain& c, const StoppingPattern& p) {
  const auto v = c.values();
  return match(std::span<const int>(v), p, false);
}

// ---------------------------------------------------------------------------
// Text form

std::string format_chain(const WeakOrderChain& c) {
  std::string out;
  bool first_block = true;
  for (const auto& b : c.blocks()) {
    if (!first_block) out += '<';
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += '=';
      out += 'x';
      out += std::to_string(b[i]);
    }
  }
  return out;
}

namespace {

int read_uint(std::string_view t, std::size_t& i) {
  const std::size_t start = i;
  long v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    v = v * 10 + (t[i] - '0');
    if (v > 1'000'000) throw ParseError(start, "index too large");
    ++i;
  }
  if (i == start) throw ParseError(i, "expected unsigned integer");
  return static_cast<int>(v);
}

WeakOrderChain validated(std::vector<std::vector<int>> blocks, std::size_t end) {
  try {
    return WeakOrderChain(std::move(blocks));
  } catch (const PreconditionError& e) {
    throw ParseError(end, e.what());
  }
}

WeakOrderChain parse_partition_form(std::string_view t) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  while (true) {
    std::size_t end = t.find('|', i);
    if (end == std::string_view::npos) end = t.size();
    std::string_view part = t.substr(i, end - i);
    if (part.empty()) throw ParseError(i, "empty block");
    std::vector<int> block;
    if (part.find(',') != std::string_view::npos) {
      std::size_t j = 0;
      while (true) {
        std::size_t local = j;
        block.push_back(read_uint(part, local));
        j = local;
        if (j == part.size()) break;
        if (part[j] != ',') throw ParseError(i + j, "expected ',' or '|'");
        ++j;
      }
    } else {
      for (std::size_t j = 0; j < part.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(part[j])))
          throw ParseError(i + j, "expected digit");
        block.push_back(part[j] - '0');
      }
    }
    blocks.push_back(std::move(block));
    if (end == t.size()) break;
    i = end + 1;
  }
  return validated(std::move(blocks), t.size());
}

}  // namespace

WeakOrderChain parse_chain(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact += text[i];
    origin.push_back(i);
  }
  origin.push_back(text.size());
  if (compact.empty()) throw ParseError(0, "empty chain");
  std::string_view t = compact;

  try {
    if (t[0] != 'x' && t[0] != 'X') return parse_partition_form(t);

    std::vector<std::vector<int>> blocks{{}};
    std::size_t i = 0;
    while (true) {
      if (i >= t.size() || (t[i] != 'x' && t[i] != 'X')) throw ParseError(i, "expected 'x'");
      ++i;
      blocks.back().push_back(read_uint(t, i));
      if (i == t.size()) break;
      if (t[i] == '<') {
        blocks.emplace_back();
      } else if (t[i] != '=') {
        throw ParseError(i, "expected '<' or '='");
      }
      ++i;
    }
    return validated(std::move(blocks), t.size());
  } catch (const ParseError& e) {
    // Report the position in the caller's text, not the compacted copy.
    throw ParseError(origin[std::min(e.position(), origin.size() - 1)],
                     "malformed chain '" + std::string(text) + "'");
  }
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<char> seen(entries_.size() + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > static_cast<int>(entries_.size()) || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') != std::string_view::npos) {
    std::size_t i = 0;
    while (true) {
      e.push_back(read_uint(text, i));
      if (i == text.size()) break;
      if (text[i] != ',') throw ParseError(i, "expected ','");
      ++i;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected digit");
      e.push_back(text[i] - '0');
    }
  }
  try {
    return Permutation(std::move(e));
  } catch (const PreconditionError& err) {
    throw ParseError(text.size(), err.what());
  }
}

namespace {

std::string join_entries(std::span<const int> e, bool wide, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (wide && i > from) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Permutation::to_string() const {
  return join_entries(entries_, entries_.size() > 9, 0, entries_.size());
}

Permutation complement(const Permutation& p) {
  std::vector<int> e(p.entries().begin(), p.entries().end());
  for (int& v : e) v = p.size() + 1 - v;
  return Permutation(std::move(e));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> e(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) e[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(e));
}

std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  return out;
}

bool contains_perm_pattern(const Permutation& p, const Permutation& pattern) {
  const auto text = p.entries();
  const auto pat = pattern.entries();
  const std::size_t k = pat.size();
  if (k == 0) return true;
  if (k > text.size()) return false;

  // Backtracking over increasing position tuples; a partial choice is kept
  // only while it stays order-isomorphic to the pattern prefix.
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  auto consistent = [&](std::size_t depth, std::size_t pos) {
    for (std::size_t j = 0; j < depth; ++j) {
      const bool pat_less = pat[j] < pat[depth];
      const bool txt_less = text[chosen[j]] < text[pos];
      if (pat_less != txt_less) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == k) return true;
    for (std::size_t pos = start; pos + (k - depth) <= text.size(); ++pos) {
      if (!consistent(depth, pos)) continue;
      chosen.push_back(pos);
      if (self(self, depth + 1, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0, 0);
}

// ---------------------------------------------------------------------------
// Underlined permutations

UnderlinedPermutation::UnderlinedPermutation(Permutation perm, std::vector<int> bridges,
                                             BlockLayout layout)
    : perm_(std::move(perm)), bridges_(std::move(bridges)), layout_(layout) {
  std::sort(bridges_.begin(), bridges_.end());
  if (std::adjacent_find(bridges_.begin(), bridges_.end()) != bridges_.end())
    throw PreconditionError("duplicate bridge");
  for (int b : bridges_)
    if (b < 1 || b >= perm_.size()) throw PreconditionError("bridge position out of range");

  for (auto [first, last] : runs()) {
    if (first == last) continue;
    const int from = layout_ == BlockLayout::MinFirst ? first + 1 : first;
    if (layout_ == BlockLayout::MinFirst) {
      for (int i = first + 1; i <= last; ++i)
        if (perm_.at(i) < perm_.at(first))
          throw PreconditionError("min-first run must start with its minimum");
    }
    if (layout_ != BlockLayout::Free) {
      for (int i = from; i < last; ++i)
        if (perm_.at(i) < perm_.at(i + 1))
          throw PreconditionError("bridged run violates its layout");
    }
  }
}

UnderlinedPermutation UnderlinedPermutation::parse(std::string_view text, BlockLayout layout) {
  std::vector<int> entries;
  std::vector<int> bridges;
  bool in_run = false;
  std::size_t run_start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') {
      if (in_run) throw ParseError(i, "nested '['");
      in_run = true;
      run_start = entries.size();
    } else if (ch == ']') {
      if (!in_run) throw ParseError(i, "unmatched ']'");
      in_run = false;
      for (std::size_t j = run_start + 1; j < entries.size(); ++j)
        bridges.push_back(static_cast<int>(j));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      entries.push_back(ch - '0');
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError(i, "unexpected character");
    }
  }
  if (in_run) throw ParseError(text.size(), "unterminated '['");
  try {
    return UnderlinedPermutation(Permutation(std::move(entries)), std::move(bridges), layout);
  } catch (const PreconditionError& err) {
    throw ParseError(text.size(), err.what());
  }
}

bool UnderlinedPermutation::has_bridge(int pos) const {
  return std::binary_search(bridges_.begin(), bridges_.end(), pos);
}

std::vector<std::pair<int, int>> UnderlinedPermutation::runs() const {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int i = 1; i <= perm_.size(); ++i) {
    if (i == perm_.size() || !has_bridge(i)) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  return out;
}

std::string UnderlinedPermutation::to_string() const {
  const bool wide = perm_.size() > 9;
  std::string out;
  bool first = true;
  for (auto [a, b] : runs()) {
    if (wide && !first) out += ',';
    first = false;
    const std::string body =
        join_entries(perm_.entries(), wide, static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b));
    out += a == b ? body : "[" + body + "]";
  }
  return out;
}

UnderlinedPermutation chain_to_underlined(const WeakOrderChain& c, BlockLayout layout) {
  std::vector<int> entries;
  std::vector<int> bridges;
  entries.reserve(static_cast<std::size_t>(c.size()));
  for (const auto& block : c.blocks()) {
    std::vector<int> b = block;  // ascending
    switch (layout) {
      case BlockLayout::Decreasing:
      case BlockLayout::Free:
        std::reverse(b.begin(), b.end());
        break;
      case BlockLayout::MinFirst:
        std::reverse(b.begin() + 1, b.end());
        break;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) bridges.push_back(static_cast<int>(entries.size()));
      entries.push_back(b[i]);
    }
  }
  return UnderlinedPermutation(Permutation(std::move(entries)), std::move(bridges), layout);
}

WeakOrderChain underlined_to_chain(const UnderlinedPermutation& u) {
  std::vector<std::vector<int>> blocks;
  for (auto [a, b] : u.runs()) {
    std::vector<int> block;
    for (int i = a; i <= b; ++i) block.push_back(u.perm().at(i));
    blocks.push_back(std::move(block));
  }
  return WeakOrderChain(std::move(blocks));
}

UnderlinedPermutation complement(const UnderlinedPermutation& u) {
  return UnderlinedPermutation(complement(u.perm()), u.bridges(), BlockLayout::Free);
}

UnderlinedPermutation reverse(const UnderlinedPermutation& u) {
  const int n = u.perm().size();
  std::vector<int> bridges;
  for (int b : u.bridges()) bridges.push_back(n - b);
  return UnderlinedPermutation(reverse(u.perm()), std::move(bridges), BlockLayout::Free);
}

}  // namespace woc
