#include "oracles.hpp"

#include "woc/bijections.hpp"
#include "woc/counting.hpp"
#include "woc/errors.hpp"
#include "woc/treesim.hpp"

#include <doctest.h>

#include <set>

using namespace woc;
using namespace woc::bijections;

namespace {

std::vector<WeakOrderChain> chains(std::initializer_list<const char*> texts) {
  std::vector<WeakOrderChain> out;
  for (const char* t : texts) out.push_back(parse_chain(t));
  return out;
}

std::set<WeakOrderChain> active_set(const char* pattern, int n) {
  const auto v = treesim::enumerate_leaves(StoppingPattern::parse(pattern), n, treesim::LeafKind::Active);
  return {v.begin(), v.end()};
}

oracle::Perm vec(const Permutation& p) {
  const auto e = p.entries();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("Dyck path basics") {
  CHECK(DyckPath("UUDD").semilength() == 2);
  CHECK_THROWS_AS(DyckPath("UDDU"), PreconditionError);
  CHECK_THROWS_AS(DyckPath(""), PreconditionError);
  CHECK_THROWS_AS(DyckPath::parse("UUXD"), ParseError);
  for (int n = 1; n <= 8; ++n) CHECK(BigInt(all_dyck_paths(n).size()) == counting::catalan(n));
  const auto three = all_dyck_paths(3);
  CHECK(three.back().word() == "UDUDUD");
  CHECK(three.front().word() == "UUUDDD");
}

TEST_CASE("sites") {
  const DyckPath q("UUUDDDUD");
  CHECK(sites(q, Variant::Sec5) == std::vector<int>{6});
  CHECK(sites(q, Variant::Sec4) == std::vector<int>{3});
  CHECK(sites(q, Variant::Sec3) == std::vector<int>{4, 6});
  const DyckPath deep("UUUUDDDD");
  CHECK(sites(deep, Variant::Sec3) == std::vector<int>{5, 6});
}

TEST_CASE("colored path parse and print") {
  const auto cp = ColoredDyckPath::parse("UUDUDD[3]", Variant::Sec5);
  CHECK(cp.marked() == std::vector<int>{3});
  CHECK(cp.to_string() == "UUDUDD[3]");
  CHECK_THROWS_AS(ColoredDyckPath::parse("UUDUDD[4]", Variant::Sec5), ParseError);
  CHECK(ColoredDyckPath::parse("UDUD", Variant::Sec5).to_string() == "UDUD[]");
  CHECK_THROWS_AS(ColoredDyckPath(DyckPath("UDUD"), Variant::Sec5, {1}), PreconditionError);
  CHECK_THROWS_AS(ColoredDyckPath::parse("UDUD[x]", Variant::Sec5), ParseError);
}

TEST_CASE("weighted counts") {
  CHECK(weighted_count(Variant::Sec4, 3) == 9);
  CHECK(weighted_count(Variant::Sec5, 4) == 45);
  CHECK(weighted_count(Variant::Sec3, 4) == 56);
  CHECK(weighted_count(Variant::Sec3, 3) == 12);
  for (int n = 1; n <= 10; ++n) {
    CHECK(weighted_count(Variant::Sec3, n) == counting::counts_123(n).a);
    CHECK(weighted_count(Variant::Sec4, n) == counting::counts_leq_leq(n).a);
    CHECK(weighted_count(Variant::Sec5, n) == counting::counts_leq_lt(n).a);
  }
  CHECK_THROWS_AS(weighted_count(Variant::Sec3, kWeightedCountMaxN + 1), ResourceLimitError);
  for (int n = 1; n <= 6; ++n)
    for (auto v : {Variant::Sec3, Variant::Sec4, Variant::Sec5})
      CHECK(BigInt(all_colorings(v, n).size()) == weighted_count(v, n));
}

TEST_CASE("Dyck paths and 321-avoiders") {
  CHECK(dyck_to_321avoider(DyckPath("UUUDDUUUDDDUDD")) == Permutation::parse("3162475"));
  CHECK(dyck_to_321avoider(DyckPath("UDUDUD")) == Permutation::parse("123"));
  CHECK(dyck_to_321avoider(DyckPath("UUDDUD")) == Permutation::parse("213"));
  CHECK_THROWS_AS(avoider321_to_dyck(Permutation::parse("321")), PreconditionError);
  for (int n = 1; n <= 8; ++n) {
    std::set<Permutation> image;
    for (const auto& p : all_dyck_paths(n)) {
      const auto s = dyck_to_321avoider(p);
      CHECK_FALSE(oracle::contains(vec(s), {3, 2, 1}));
      CHECK(avoider321_to_dyck(s) == p);
      image.insert(s);
    }
    std::int64_t avoiders = 0;
    oracle::for_each_perm(n, [&](const oracle::Perm& s) { avoiders += !oracle::contains(s, {3, 2, 1}); });
    CHECK(static_cast<std::int64_t>(image.size()) == avoiders);
  }
}

TEST_CASE("UDD-marked paths of semilength 3") {
  std::vector<WeakOrderChain> decoded;
  for (const auto& cp : all_colorings(Variant::Sec4, 3)) decoded.push_back(prop41_decode(cp));
  CHECK(decoded == chains({"x1<x3<x2", "x1=x3<x2", "x2<x1<x3", "x2<x1=x3", "x2<x3<x1", "x2=x3<x1",
                           "x3<x1<x2", "x3<x1=x2", "x3<x2<x1"}));
}

TEST_CASE("UDD encode example") {
  const auto cp = prop41_encode(parse_chain("x5=x7<x2=x6<x4<x1<x3"));
  CHECK(cp.to_string() == "UUUDDUUUDDDUDD[3,8]");
  CHECK(prop41_decode(cp) == parse_chain("x5=x7<x2=x6<x4<x1<x3"));
  CHECK(prop41_decode(ColoredDyckPath::parse("UDUDUDUD[]", Variant::Sec4)) == parse_chain("x4<x3<x2<x1"));
  CHECK_THROWS_AS(prop41_encode(parse_chain("x1<x2<x3")), PreconditionError);
}

TEST_CASE("valley-marked paths of semilength 3") {
  std::set<WeakOrderChain> decoded;
  for (const auto& cp : all_colorings(Variant::Sec5, 3)) decoded.insert(prop51_decode(cp));
  CHECK(decoded.size() == 11);
  CHECK(decoded == active_set("<=,<", 3));
  for (const auto& c : chains({"x2<x1<x3", "x2<x3<x1", "x2<x3=x1", "x3<x1<x2", "x3=x1<x2", "x3<x2<x1", "x3<x2=x1",
                               "x3=x2<x1", "x3=x2=x1"}))
    CHECK(decoded.count(c) == 1);
  CHECK(prop51_decode(ColoredDyckPath::parse("UDUDUD[]", Variant::Sec5)) == parse_chain("x3<x2<x1"));
  CHECK(prop51_decode(ColoredDyckPath::parse("UDUDUD[2,4]", Variant::Sec5)) == parse_chain("x3=x2=x1"));
  CHECK_THROWS_AS(prop51_encode(parse_chain("x1<x2<x3")), PreconditionError);
}

TEST_CASE("marked-path bijections are onto the active sets") {
  for (int n = 1; n <= 6; ++n) {
    std::set<WeakOrderChain> img4, img5;
    for (const auto& cp : all_colorings(Variant::Sec4, n)) {
      const auto c = prop41_decode(cp);
      CHECK(img4.insert(c).second);
      CHECK(prop41_encode(c) == cp);
    }
    for (const auto& cp : all_colorings(Variant::Sec5, n)) {
      const auto c = prop51_decode(cp);
      CHECK(img5.insert(c).second);
      CHECK(prop51_encode(c) == cp);
    }
    CHECK(img4 == active_set("<=,<=", n));
    CHECK(img5 == active_set("<=,<", n));
  }
}

TEST_CASE("right-to-left maxima maps") {
  CHECK(rl_maxima_positions(Permutation::parse("3162475")) == std::vector<int>{6, 7});
  for (int n = 1; n <= 7; ++n)
    oracle::for_each_perm(n, [](const oracle::Perm& e) {
      const Permutation p(e);
      const auto a = to_213_avoider_same_rl_maxima(p);
      const auto b = to_123_avoider_same_rl_maxima(p);
      REQUIRE_FALSE(oracle::contains(vec(a), {2, 1, 3}));
      REQUIRE_FALSE(oracle::contains(vec(b), {1, 2, 3}));
      const auto rl = rl_maxima_positions(p);
      REQUIRE(rl_maxima_positions(a) == rl);
      REQUIRE(rl_maxima_positions(b) == rl);
      for (int i : rl) {
        REQUIRE(a.at(i) == p.at(i));
        REQUIRE(b.at(i) == p.at(i));
      }
    });
}

TEST_CASE("phi examples") {
  CHECK(phi(parse_chain("x6<x8<x7=x4<x2<x9<x5=x1<x3")).to_string() == "68[71]49[52]3");
  CHECK(phi(parse_chain("x6<x5<x8<x9<x7=x4=x2<x1<x3")).to_string() == "8569[741]23");
  CHECK(phi_inverse(UnderlinedPermutation::parse("68[71]49[52]3", BlockLayout::Free)) ==
        parse_chain("x6<x8<x7=x4<x2<x9<x5=x1<x3"));
  CHECK_THROWS_AS(phi(parse_chain("x3<x2<x1")), PreconditionError);
}

TEST_CASE("phi is a bijection onto its weighted image") {
  const auto pat = StoppingPattern::parse("<=,<");
  for (int n = 3; n <= 7; ++n) {
    const auto fresh = treesim::enumerate_leaves(pat, n, treesim::LeafKind::InactiveAtN);
    std::set<std::pair<Permutation, std::vector<int>>> seen;
    for (const auto& c : fresh) {
      const auto u = phi(c);
      REQUIRE(phi_inverse(u) == c);
      REQUIRE(seen.emplace(u.perm(), u.bridges()).second);
      const auto e = vec(u.perm());
      REQUIRE(oracle::contains(e, {2, 1, 3}));
      REQUIRE_FALSE(oracle::contains(oracle::without_max(e), {2, 1, 3}));
    }
    BigInt weighted = 0;
    for (int d = 1; d <= n - 2; ++d) weighted += pow2(d) * counting::ell213(n, d);
    CHECK(BigInt(fresh.size()) == weighted);
  }
}
