#include "oracles.hpp"

#include "woc/counting.hpp"
#include "woc/errors.hpp"
#include "woc/treesim.hpp"

#include <doctest.h>

using namespace woc;
using namespace woc::counting;

namespace {

treesim::LeafTally sim(const char* pattern, int n) { return treesim::tally(StoppingPattern::parse(pattern), n); }

void check_against_sim(const char* pattern, int n_max, CountTriple (*f)(int)) {
  const auto t = sim(pattern, n_max);
  for (int n = 1; n <= n_max; ++n) {
    INFO(pattern << " n=" << n);
    CHECK(f(n) == CountTriple{t.a_at(n), t.delta_at(n), t.w_at(n)});
  }
}

}  // namespace

TEST_CASE("fubini") {
  CHECK(fubini(0) == 1);
  CHECK(fubini(4) == 75);
  CHECK(fubini(6) == 4683);
  for (int n = 1; n <= 7; ++n) CHECK(fubini(n) == oracle::ordered_partitions(n));
}

TEST_CASE("catalan and narayana against Dyck census") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(narayana(3, 1) == 3);
  CHECK(narayana(4, 1) == 6);
  for (int n = 1; n <= 9; ++n) {
    const auto census = oracle::dyck_by_valleys(n);
    BigInt sum = 0;
    for (int v = 0; v < n; ++v) {
      CHECK(narayana(n, v) == census[static_cast<std::size_t>(v)]);
      sum += narayana(n, v);
    }
    CHECK(sum == catalan(n));
  }
  CHECK_THROWS_AS(narayana(3, 3), DomainError);
  CHECK_THROWS_AS(narayana(0, 0), DomainError);
}

TEST_CASE("size-2 closed forms") {
  CHECK(size2_counts(Size2Kind::Tie, 5).w == 239);
  CHECK(size2_counts(Size2Kind::Lt, 6).w == 161);
  CHECK(size2_counts(Size2Kind::Le, 7).w == 43);
  const auto tie = sim("=", 9), lt = sim("<", 9), le = sim("<=", 9);
  for (int n = 1; n <= 9; ++n) {
    CHECK(size2_counts(Size2Kind::Tie, n) == CountTriple{tie.a_at(n), tie.delta_at(n), tie.w_at(n)});
    CHECK(size2_counts(Size2Kind::Lt, n) == CountTriple{lt.a_at(n), lt.delta_at(n), lt.w_at(n)});
    CHECK(size2_counts(Size2Kind::Le, n) == CountTriple{le.a_at(n), le.delta_at(n), le.w_at(n)});
  }
}

TEST_CASE("e123 against the permutation census") {
  CHECK(e123(3, 1) == 4);
  CHECK(e123(4, 1) == 2);
  CHECK(e123(4, 2) == 11);
  for (int n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (int d = 0; d < n; ++d) {
      CHECK(e123(n, d) == oracle::e123(n, d));
      sum += e123(n, d);
    }
    CHECK(sum == catalan(n));
  }
  for (int n = 9; n <= 12; ++n) {
    BigInt sum = 0;
    for (int d = 0; d < n; ++d) sum += e123(n, d);
    CHECK(sum == catalan(n));
  }
}

TEST_CASE("g123 and ell213 against their set definitions") {
  CHECK(g123(3, 0) == 1);
  CHECK(g123(4, 1) == 6);
  CHECK(g123(5, 1) == 2 * e123(4, 1) + 4 * e123(4, 0) - e123(5, 1));
  CHECK(ell213(3, 1) == 1);
  CHECK(ell213(4, 1) == 3);
  CHECK(ell213(4, 2) == 3);
  CHECK(g123(1, 0) == 0);
  CHECK(g123(2, 0) == 0);
  for (int n = 4; n <= 8; ++n) {
    for (int d = 1; d <= n - 3; ++d) {
      INFO("n=" << n << " d=" << d);
      CHECK(g123(n, d) == oracle::g_set(n, d, {1, 2, 3}));
    }
    for (int d = 1; d <= n - 2; ++d) {
      INFO("n=" << n << " d=" << d);
      CHECK(ell213(n, d) == oracle::g_set(n, d, {2, 1, 3}));
    }
  }
  CHECK(oracle::g_set(3, 0, {1, 2, 3}) == 1);
  CHECK(oracle::g_set(3, 1, {2, 1, 3}) == 1);
  CHECK_THROWS_AS(g123(4, 0), DomainError);
  CHECK_THROWS_AS(ell213(5, 4), DomainError);
}

TEST_CASE("strict 123 condition") {
  CHECK(counts_123(5).a == 284);
  CHECK(counts_123(5).w == 401);
  CHECK(counts_123(8).w == 95441);
  check_against_sim("<,<", 9, counts_123);
  for (int n = 1; n <= 30; ++n) CHECK(actives_123_by_descents(n) == actives_123_closed(n));
}

TEST_CASE("weak 123 condition") {
  CHECK(counts_leq_leq(5).a == 113);
  CHECK(counts_leq_leq(5).w == 269);
  CHECK(counts_leq_leq(9).w == 118765);
  check_against_sim("<=,<=", 9, counts_leq_leq);
  for (int n = 1; n <= 30; ++n) CHECK(actives_leq_leq_by_descents(n) == actives_leq_leq_closed(n));
}

TEST_CASE("mixed 123 condition") {
  CHECK(counts_leq_lt(4).a == 45);
  CHECK(counts_leq_lt(6).w == 1827);
  CHECK(counts_leq_lt(10).w == 1658723);
  check_against_sim("<=,<", 9, counts_leq_lt);
  // Little Schroeder numbers as sum_v 2^v N(n,v), from the Dyck census.
  for (int n = 1; n <= 9; ++n) {
    const auto census = oracle::dyck_by_valleys(n);
    std::int64_t s = 0;
    for (int v = 0; v < n; ++v) s += (std::int64_t{1} << v) * census[static_cast<std::size_t>(v)];
    CHECK(counts_leq_lt(n).a == s);
  }
}

TEST_CASE("k-equal condition") {
  CHECK(counts_kequal(3, 5).w == 505);
  CHECK(counts_kequal(3, 3) == CountTriple{12, 1, 13});
  CHECK(counts_kequal(2, 5).w == 239);
  for (int n = 1; n <= 12; ++n) CHECK(counts_kequal(2, n) == size2_counts(Size2Kind::Tie, n));
  for (int k = 3; k <= 4; ++k) {
    const auto t = sim(k == 3 ? "=,=" : "=,=,=", 8);
    for (int n = 1; n <= 8; ++n) CHECK(counts_kequal(k, n) == CountTriple{t.a_at(n), t.delta_at(n), t.w_at(n)});
  }
}

TEST_CASE("<,= condition") {
  CHECK(counts_lt_eq(3) == CountTriple{12, 1, 13});
  CHECK(counts_lt_eq(4).delta == 10);
  CHECK(counts_lt_eq(2) == CountTriple{3, 0, 3});
  check_against_sim("<,=", 9, counts_lt_eq);
  for (int n = 3; n <= 25; ++n) CHECK(delta_lt_eq_recurrence(n) == delta_lt_eq_closed(n));
}

TEST_CASE("<=,= condition") {
  CHECK(counts_le_eq(3).delta == 2);
  CHECK(counts_le_eq(3).a == 11);
  CHECK(counts_le_eq(3).w == 13);
  CHECK(counts_le_eq(4) == CountTriple{53, 14, 69});
  check_against_sim("<=,=", 9, counts_le_eq);
  for (int n = 4; n <= 30; ++n)
    CHECK((n - 2) * (actives_le_eq(n - 2) + actives_le_eq(n - 3)) == actives_le_eq(n - 1) - actives_le_eq(n - 2));
}

TEST_CASE("substituted Narayana table reaches the <=,< formula") {
  const NarayanaFn off_by_one = [](int n, int v) { return narayana(n, v) + (n == 5 && v == 2 ? 1 : 0); };
  CHECK(counts_leq_lt(4, off_by_one) == counts_leq_lt(4));
  CHECK_FALSE(counts_leq_lt(5, off_by_one) == counts_leq_lt(5));
}
