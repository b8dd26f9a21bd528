#include "oracles.hpp"

#include "woc/core.hpp"
#include "woc/errors.hpp"

#include <doctest.h>

#include <set>

using namespace woc;

namespace {

std::vector<std::string> child_strings(std::string_view chain) {
  std::vector<std::string> out;
  for (const auto& c : children(parse_chain(chain))) out.push_back(format_chain(c));
  return out;
}

/// All chains on n variables, built by exhaustive insertion.
std::vector<WeakOrderChain> all_chains(int n) {
  std::vector<WeakOrderChain> level{parse_chain("x1")};
  for (int j = 2; j <= n; ++j) {
    std::vector<WeakOrderChain> next;
    for (const auto& c : level)
      for (auto& k : children(c)) next.push_back(std::move(k));
    level = std::move(next);
  }
  return level;
}

bool brute_contains(const WeakOrderChain& c, const StoppingPattern& p) {
  const auto v = c.values();
  const auto rels = p.relations();
  const int n = c.size(), m = static_cast<int>(p.arity());
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::function<bool(int, int)> rec = [&](int depth, int from) {
    if (depth == m) {
      for (int t = 0; t + 1 < m; ++t) {
        const int a = v[idx[t]], b = v[idx[t + 1]];
        const bool ok = rels[t] == Relation::Lt ? a < b : rels[t] == Relation::Le ? a <= b : a == b;
        if (!ok) return false;
      }
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

}  // namespace

TEST_CASE("children of x2<x1 follow gap-then-block order") {
  CHECK(child_strings("x2<x1") ==
        std::vector<std::string>{"x3<x2<x1", "x2=x3<x1", "x2<x3<x1", "x2<x1=x3", "x2<x1<x3"});
  CHECK(children(parse_chain("x1")).size() == 3);
  CHECK(children(parse_chain("x2<x1=x3<x4")).size() == 7);
}

TEST_CASE("children are distinct and restrict back to the parent") {
  for (const auto& c : all_chains(4)) {
    const auto kids = children(c);
    CHECK(kids.size() == 2 * c.block_count() + 1);
    CHECK(std::set<WeakOrderChain>(kids.begin(), kids.end()).size() == kids.size());
    for (const auto& k : kids) CHECK(k.restrict_to(c.size()) == c);
  }
}

TEST_CASE("chain count per level is the Fubini number") {
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<std::int64_t>(all_chains(n).size()) == oracle::ordered_partitions(n));
}

TEST_CASE("contains_pattern examples") {
  CHECK(contains_pattern(parse_chain("x1<x2=x3"), StoppingPattern::parse("<=,=")));
  CHECK_FALSE(contains_pattern(parse_chain("x3<x2<x1"), StoppingPattern::parse("<,<")));
  CHECK(contains_pattern(parse_chain("x2<x4=x5<x1<x3"), StoppingPattern::parse("=")));
}

TEST_CASE("contains_pattern matches tuple search and is monotone") {
  std::vector<StoppingPattern> patterns;
  for (const char* s : {"=", "<", "<=", "<,<", "<=,<=", "<=,<", "=,=", "<,=", "<=,=", "=,<", "<,<=,=",
                        "=,<=,<", "<,<,<"})
    patterns.push_back(StoppingPattern::parse(s));
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_chains(n))
      for (const auto& p : patterns) {
        const bool has = contains_pattern(c, p);
        REQUIRE(has == brute_contains(c, p));
        if (has)
          for (const auto& k : children(c)) CHECK(contains_pattern(k, p));
      }
}

TEST_CASE("tie pattern means some block has two elements") {
  const auto tie = StoppingPattern::parse("=");
  for (const auto& c : all_chains(5)) {
    const bool big_block = std::any_of(c.blocks().begin(), c.blocks().end(),
                                       [](const auto& b) { return b.size() >= 2; });
    CHECK(contains_pattern(c, tie) == big_block);
  }
}

TEST_CASE("format and parse") {
  CHECK(format_chain(WeakOrderChain({{2}, {4, 5}, {1}, {3}})) == "x2<x4=x5<x1<x3");
  CHECK(parse_chain("x1").blocks() == std::vector<std::vector<int>>{{1}});
  CHECK(parse_chain("x3=x1<x2").blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(parse_chain("2|54|1|3") == parse_chain("x2<x4=x5<x1<x3"));
  CHECK(parse_chain("10,2|1|3,4,5,6,7,8,9").size() == 10);
  for (const auto& c : all_chains(5)) CHECK(parse_chain(format_chain(c)) == c);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_chain(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("x1<y2") == 3);
  CHECK(position_of("x1<<x2") == 3);
  CHECK(position_of("") == 0);
  CHECK(position_of("x1<x3") != std::string::npos);  // index 2 missing
  CHECK(position_of("x1=x1") != std::string::npos);
  CHECK_THROWS_AS(StoppingPattern::parse("<,"), ParseError);
}

TEST_CASE("stopping pattern parse") {
  CHECK(StoppingPattern::parse("<=,<").arity() == 3);
  CHECK(StoppingPattern::parse("≤,<") == StoppingPattern::parse("<=,<"));
  CHECK(StoppingPattern::parse("<=,<").to_string() == "<=,<");
  CHECK_THROWS_AS(StoppingPattern(std::vector<Relation>{}), PreconditionError);
}

TEST_CASE("underlined permutations follow the block conventions") {
  CHECK(chain_to_underlined(parse_chain("x2<x4=x5<x1<x3"), BlockLayout::Decreasing).to_string() == "2[54]13");
  CHECK(chain_to_underlined(parse_chain("x2=x4=x6<x5<x1=x3"), BlockLayout::Decreasing).to_string() ==
        "[642]5[31]");
  const auto w = chain_to_underlined(parse_chain("x5=x7<x2=x6<x4<x1<x3"), BlockLayout::MinFirst);
  CHECK(w.to_string() == "[57][26]413");
  CHECK(complement(w).to_string() == "[31][62]475");

  for (const auto& c : all_chains(5))
    for (auto layout : {BlockLayout::Decreasing, BlockLayout::MinFirst})
      CHECK(underlined_to_chain(chain_to_underlined(c, layout)) == c);

  CHECK_THROWS_AS(UnderlinedPermutation::parse("[45]123", BlockLayout::Decreasing), ParseError);
  CHECK_NOTHROW(UnderlinedPermutation::parse("[45]123", BlockLayout::Free));
  CHECK_THROWS_AS(UnderlinedPermutation::parse("[514]23", BlockLayout::MinFirst), ParseError);
}

TEST_CASE("reverse moves bridge i to n-i") {
  const auto u = UnderlinedPermutation::parse("2[54]13", BlockLayout::Decreasing);
  CHECK(reverse(u).to_string() == "31[45]2");
  CHECK(reverse(reverse(u)) == u);
  CHECK(reverse(u).layout() == BlockLayout::Free);
}

TEST_CASE("permutation operations") {
  CHECK(reverse(Permutation::parse("123")) == Permutation::parse("321"));
  CHECK(complement(Permutation::parse("5726413")) == Permutation::parse("3162475"));
  CHECK(descents(Permutation::parse("25413")) == std::vector<int>{2, 3});
  CHECK(inverse(Permutation::parse("312")) == Permutation::parse("231"));
  CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), PreconditionError);
}

TEST_CASE("contains_perm_pattern") {
  CHECK(contains_perm_pattern(Permutation::parse("23154"), Permutation::parse("123")));
  CHECK_FALSE(contains_perm_pattern(Permutation::parse("53214"), Permutation::parse("123")));
  CHECK(contains_perm_pattern(Permutation::parse("123"), Permutation::parse("123")));
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_perm(n, [](const oracle::Perm& p) {
      for (const oracle::Perm& pat : {oracle::Perm{1, 2, 3}, oracle::Perm{2, 1, 3}, oracle::Perm{1, 3, 2, 4}})
        REQUIRE(contains_perm_pattern(Permutation(p), Permutation(pat)) == oracle::contains(p, pat));
    });
}

TEST_CASE("123 in a strict chain is 123 in its permutation") {
  // For chains without ties, <,< occurs iff the index sequence contains 123.
  const auto p = StoppingPattern::parse("<,<");
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_perm(n, [&](const oracle::Perm& perm) {
      std::vector<std::vector<int>> blocks;
      for (int v : perm) blocks.push_back({v});
      REQUIRE(contains_pattern(WeakOrderChain(blocks), p) == oracle::contains(perm, {1, 2, 3}));
    });
}
