#pragma once

// Closed forms and recurrences for leaf counts, over arbitrary-precision
// integers. Every family is cross-checked against the tree simulator in the
// test suite.

#include "woc/numeric.hpp"

#include <functional>

namespace woc::counting {

/// Leaf counts at one level: active, newly inactive, and total leaves.
struct CountTriple {
  BigInt a;
  BigInt delta;
  BigInt w;

  BigInt b() const { return w - a; }
  friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

/// Ordered Bell number.
BigInt fubini(int n);
BigInt catalan(int m);
/// (1/n) C(n,v) C(n,v+1); DomainError unless n >= 1 and 0 <= v <= n-1.
BigInt narayana(int n, int v);

enum class Size2Kind { Tie, Lt, Le };
CountTriple size2_counts(Size2Kind kind, int n);

/// 123-avoiding permutations of [n] with d descents, read off E(x,y).
BigInt e123(int n, int d);

/// Permutations of [n] with a 123 pattern, d descents, and 123-avoiding
/// reduction. Defined for (3,0) and for n > 3, 1 <= d <= n-3; zero for n < 3.
BigInt g123(int n, int d);

/// 213 analogue of g123 via Narayana numbers. Defined for (3,1) and for
/// n > 3, 1 <= d <= n-2; zero for n < 3.
BigInt ell213(int n, int d);

/// Condition <,< . Computes the active count twice (descent-weighted e123
/// sum and the alternating Catalan closed form) and throws ConsistencyError
/// if they differ.
CountTriple counts_123(int n);
/// a_n as sum_d 2^d e_{n,d}.
BigInt actives_123_by_descents(int n);
/// a_n as sum_j (-1)^j 2^{n-j-1} C(n-j,j) C_{n-j}.
BigInt actives_123_closed(int n);

/// Condition <=,<= .
CountTriple counts_leq_leq(int n);
/// a_n as sum_d 2^{n-1-d} e_{n,d}.
BigInt actives_leq_leq_by_descents(int n);
/// a_n as sum_j C(n-j,j) C_{n-j}.
BigInt actives_leq_leq_closed(int n);

/// Source of Narayana numbers; lets callers substitute a table.
using NarayanaFn = std::function<BigInt(int n, int v)>;

/// Condition <=,< .
CountTriple counts_leq_lt(int n);
CountTriple counts_leq_lt(int n, const NarayanaFn& narayana_fn);

/// k-equal condition x_{i1} = ... = x_{ik}, k >= 2.
CountTriple counts_kequal(int k, int n);

/// Condition <,= .
CountTriple counts_lt_eq(int n);
/// Newly inactive count for <,= by the recurrence.
BigInt delta_lt_eq_recurrence(int n);
/// Newly inactive count for <,= by (n!/2) sum_{k=3}^n (k-2)/k.
BigInt delta_lt_eq_closed(int n);

/// Condition <=,= .
CountTriple counts_le_eq(int n);
/// Active count a_n = n a_{n-1} + (n-1) a_{n-2}, with a_0 = a_1 = 1.
BigInt actives_le_eq(int n);

}  // namespace woc::counting
