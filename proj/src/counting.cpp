#include "woc/counting.hpp"

#include "woc/errors.hpp"
#include "woc/series.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace woc::counting {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string args(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

/// e_{n,d} table read off the bivariate expansion of E(x,y). Grows on
/// demand; readers and the grower share one mutex.
class DescentTable {
 public:
  BigInt get(int n, int d) {
    std::lock_guard lock(mu_);
    if (n > order_) grow(std::max(n, 2 * order_));
    return series::count_coeff(e_, n, d);
  }

 private:
  void grow(int order) {
    e_ = series::e_closed_form(series::PolyY::y(), order);
    order_ = order;
  }

  std::mutex mu_;
  int order_ = 0;
  series::BiSeries e_{0};
};

DescentTable& descent_table() {
  static DescentTable table;
  return table;
}

BigInt g_or_zero(int n, int d) {
  if (n < 3) return 0;
  if (n == 3) return d == 0 ? 1 : 0;
  if (d < 1 || d > n - 3) return 0;
  return g123(n, d);
}

BigInt ell_from(const NarayanaFn& N, int n, int d) {
  return BigInt(d + 1) * N(n - 1, d) + BigInt(n - d) * N(n - 1, d - 1) - N(n, d);
}

BigInt ell_or_zero(const NarayanaFn& N, int n, int d) {
  if (n < 3) return 0;
  if (n == 3) return d == 1 ? 1 : 0;
  if (d < 1 || d > n - 2) return 0;
  return ell_from(N, n, d);
}

CountTriple finish(int n, BigInt a, const std::vector<BigInt>& delta_by_level) {
  BigInt b = 0;
  for (int j = 1; j <= n; ++j) b += delta_by_level[static_cast<std::size_t>(j)];
  CountTriple t;
  t.delta = delta_by_level[static_cast<std::size_t>(n)];
  t.w = a + b;
  t.a = std::move(a);
  return t;
}

}  // namespace

BigInt fubini(int n) {
  require(n >= 0, "fubini needs n >= 0");
  std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= m; ++i) f[static_cast<std::size_t>(m)] += binomial(m, i) * f[static_cast<std::size_t>(m - i)];
  return f[static_cast<std::size_t>(n)];
}

BigInt catalan(int m) {
  require(m >= 0, "catalan needs m >= 0");
  return binomial(2L * m, m) / (m + 1);
}

BigInt narayana(int n, int v) {
  require(n >= 1 && v >= 0 && v <= n - 1, "narayana" + args(n, v) + " needs n >= 1, 0 <= v <= n-1");
  return binomial(n, v) * binomial(n, v + 1) / n;
}

CountTriple size2_counts(Size2Kind kind, int n) {
  require(n >= 1, "size-2 counts need n >= 1");
  CountTriple t;
  switch (kind) {
    case Size2Kind::Tie:
      t.a = factorial(n);
      t.w = 2 * factorial(n) - 1;
      t.delta = BigInt(n - 1) * factorial(n - 1);
      break;
    case Size2Kind::Lt:
      t.a = pow2(n - 1);
      t.w = BigInt(n - 1) * pow2(n - 1) + 1;
      t.delta = n >= 2 ? BigInt(n - 1) * pow2(n - 2) : BigInt(0);
      break;
    case Size2Kind::Le:
      t.a = 1;
      t.w = BigInt(n) * n - n + 1;
      t.delta = 2 * BigInt(n - 1);
      break;
  }
  return t;
}

BigInt e123(int n, int d) {
  require(n >= 1 && d >= 0 && d <= n - 1, "e123" + args(n, d) + " needs n >= 1, 0 <= d <= n-1");
  return descent_table().get(n, d);
}

BigInt g123(int n, int d) {
  if (n == 1 || n == 2) {
    require(d >= 0, "g123 needs d >= 0");
    return 0;
  }
  if (n == 3 && d == 0) return 1;
  require(n > 3 && d >= 1 && d <= n - 3, "g123" + args(n, d) + " is outside its domain");
  return BigInt(d + 1) * e123(n - 1, d) + BigInt(n - d) * e123(n - 1, d - 1) - e123(n, d);
}

BigInt ell213(int n, int d) {
  if (n == 1 || n == 2) {
    require(d >= 0, "ell213 needs d >= 0");
    return 0;
  }
  if (n == 3 && d == 1) return 1;
  require(n > 3 && d >= 1 && d <= n - 2, "ell213" + args(n, d) + " is outside its domain");
  return ell_from(narayana, n, d);
}

// ---------------------------------------------------------------------------
// <,<

BigInt actives_123_by_descents(int n) {
  require(n >= 1, "n >= 1");
  BigInt a = 0;
  for (int d = 0; d <= n - 1; ++d) a += pow2(d) * e123(n, d);
  return a;
}

BigInt actives_123_closed(int n) {
  require(n >= 1, "n >= 1");
  BigInt a = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    if (n - j - 1 < 0) continue;
    BigInt term = pow2(n - j - 1) * binomial(n - j, j) * catalan(n - j);
    if (j % 2) a -= term; else a += term;
  }
  return a;
}

CountTriple counts_123(int n) {
  require(n >= 1, "counts_123 needs n >= 1");
  BigInt a = actives_123_by_descents(n);
  if (a != actives_123_closed(n))
    throw ConsistencyError("active counts for <,< disagree at n=" + std::to_string(n));
  std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1);
  for (int j = 3; j <= n; ++j)
    for (int d = 0; d <= j - 3; ++d) delta[static_cast<std::size_t>(j)] += pow2(d) * g_or_zero(j, d);
  return finish(n, std::move(a), delta);
}

// ---------------------------------------------------------------------------
// <=,<=

BigInt actives_leq_leq_by_descents(int n) {
  require(n >= 1, "n >= 1");
  BigInt a = 0;
  for (int d = 0; d <= n - 1; ++d) a += pow2(n - 1 - d) * e123(n, d);
  return a;
}

BigInt actives_leq_leq_closed(int n) {
  require(n >= 1, "n >= 1");
  BigInt a = 0;
  for (int j = 0; 2 * j <= n; ++j) a += binomial(n - j, j) * catalan(n - j);
  return a;
}

CountTriple counts_leq_leq(int n) {
  require(n >= 1, "counts_leq_leq needs n >= 1");
  BigInt a = actives_leq_leq_by_descents(n);
  if (a != actives_leq_leq_closed(n))
    throw ConsistencyError("active counts for <=,<= disagree at n=" + std::to_string(n));
  // A chain that becomes inactive at level j projects to a permutation with
  // a 321 pattern and j-1-d descents, whose complement lies in G^d_j(123).
  std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1);
  for (int j = 3; j <= n; ++j)
    for (int d = 0; d <= j - 3; ++d)
      delta[static_cast<std::size_t>(j)] += pow2(j - 1 - d) * g_or_zero(j, d);
  return finish(n, std::move(a), delta);
}

// ---------------------------------------------------------------------------
// <=,<

CountTriple counts_leq_lt(int n) { return counts_leq_lt(n, narayana); }

CountTriple counts_leq_lt(int n, const NarayanaFn& narayana_fn) {
  require(n >= 1, "counts_leq_lt needs n >= 1");
  BigInt a = 0;
  for (int v = 0; v <= n - 1; ++v) a += pow2(v) * narayana_fn(n, v);
  std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1);
  for (int j = 3; j <= n; ++j)
    for (int d = 1; d <= j - 2; ++d) delta[static_cast<std::size_t>(j)] += pow2(d) * ell_or_zero(narayana_fn, j, d);
  return finish(n, std::move(a), delta);
}

// ---------------------------------------------------------------------------
// Mixed conditions

CountTriple counts_kequal(int k, int n) {
  require(k >= 2, "k-equal needs k >= 2");
  require(n >= 1, "counts_kequal needs n >= 1");
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    if (m < k) {
      a[static_cast<std::size_t>(m)] = fubini(m);
      continue;
    }
    for (int i = 1; i <= k - 1; ++i) a[static_cast<std::size_t>(m)] += binomial(m, i) * a[static_cast<std::size_t>(m - i)];
  }
  std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1);
  for (int j = k; j <= n; ++j) {
    BigInt s = 0;
    for (int i = 0; i <= j - k; ++i)
      s += binomial(j - k, i) * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j - k - i)];
    delta[static_cast<std::size_t>(j)] = binomial(j - 1, k - 1) * s;
  }
  return finish(n, a[static_cast<std::size_t>(n)], delta);
}

namespace {

BigInt actives_lt_eq(int n) { return factorial(n + 1) / 2; }

std::vector<BigInt> deltas_lt_eq(int n) {
  std::vector<BigInt> delta(static_cast<std::size_t>(std::max(n, 2)) + 1);
  for (int m = 3; m <= n; ++m)
    delta[static_cast<std::size_t>(m)] = BigInt(m) * delta[static_cast<std::size_t>(m - 1)] + BigInt(m - 2) * actives_lt_eq(m - 2);
  return delta;
}

std::vector<BigInt> actives_le_eq_table(int n) {
  std::vector<BigInt> a(static_cast<std::size_t>(std::max(n, 1)) + 1);
  a[0] = 1;
  a[1] = 1;
  for (int m = 2; m <= n; ++m)
    a[static_cast<std::size_t>(m)] = BigInt(m) * a[static_cast<std::size_t>(m - 1)] + BigInt(m - 1) * a[static_cast<std::size_t>(m - 2)];
  return a;
}

}  // namespace

BigInt delta_lt_eq_recurrence(int n) {
  require(n >= 1, "n >= 1");
  return deltas_lt_eq(n)[static_cast<std::size_t>(n)];
}

BigInt delta_lt_eq_closed(int n) {
  require(n >= 1, "n >= 1");
  Rational sum = 0;
  for (int k = 3; k <= n; ++k) sum += Rational(k - 2, k);
  const Rational value = Rational(factorial(n)) / 2 * sum;
  if (denominator(value) != 1)
    throw ConsistencyError("closed form for <,= is not an integer at n=" + std::to_string(n));
  return numerator(value);
}

CountTriple counts_lt_eq(int n) {
  require(n >= 1, "counts_lt_eq needs n >= 1");
  const auto delta = deltas_lt_eq(n);
  for (int m = 1; m <= n; ++m)
    if (delta[static_cast<std::size_t>(m)] != delta_lt_eq_closed(m))
      throw ConsistencyError("newly inactive counts for <,= disagree at n=" + std::to_string(m));
  return finish(n, actives_lt_eq(n), delta);
}

BigInt actives_le_eq(int n) {
  require(n >= 0, "n >= 0");
  return actives_le_eq_table(n)[static_cast<std::size_t>(n)];
}

CountTriple counts_le_eq(int n) {
  require(n >= 1, "counts_le_eq needs n >= 1");
  const auto a = actives_le_eq_table(n);
  std::vector<BigInt> delta(static_cast<std::size_t>(std::max(n, 3)) + 1);
  delta[3] = 2;
  for (int m = 4; m <= n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    delta[i] = BigInt(m - 1) * delta[i - 1] + BigInt(m - 2) * delta[i - 2] + a[i - 1] - a[i - 2];
  }
  return finish(n, a[static_cast<std::size_t>(n)], delta);
}

}  // namespace woc::counting
