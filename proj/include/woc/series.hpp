#pragma once

// Truncated formal power series in x over an exact ring: the rationals, or
// polynomials in y with rational coefficients (bivariate series graded by x).

#include "woc/errors.hpp"
#include "woc/numeric.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace woc::series {

/// Polynomial in y over the rationals, kept without trailing zeros.
class PolyY {
 public:
  PolyY() = default;
  PolyY(Rational constant);  // NOLINT(google-explicit-constructor): rationals embed in Q[y]
  PolyY(long constant) : PolyY(Rational(constant)) {}  // NOLINT
  explicit PolyY(std::vector<Rational> coeffs);

  static PolyY y() { return PolyY(std::vector<Rational>{0, 1}); }
  static PolyY monomial(Rational c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational coeff(int d) const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  PolyY derivative() const;
  Rational evaluate(const Rational& y) const;
  std::string to_string() const;

  PolyY& operator+=(const PolyY& o);
  PolyY& operator-=(const PolyY& o);
  friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
  friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
  friend PolyY operator-(PolyY a);
  friend PolyY operator*(const PolyY& a, const PolyY& b);
  friend bool operator==(const PolyY&, const PolyY&) = default;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Quotient when `den` divides `num` exactly; DomainError otherwise.
PolyY exact_div(const PolyY& num, const PolyY& den);

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& r) { return r == 0; }
  static bool is_unit(const Rational& r) { return r != 0; }
  static Rational inverse(const Rational& r) { return 1 / r; }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DomainError("division by zero");
    return a / b;
  }
  static Rational scale(const Rational& a, const Rational& s) { return a * s; }
  static Rational derivative_y(const Rational&) { return 0; }
};

template <>
struct RingTraits<PolyY> {
  static bool is_zero(const PolyY& r) { return r.is_zero(); }
  static bool is_unit(const PolyY& r) { return r.degree() == 0; }
  static PolyY inverse(const PolyY& r) { return PolyY(1 / r.coeff(0)); }
  static PolyY exact_div(const PolyY& a, const PolyY& b) { return series::exact_div(a, b); }
  static PolyY scale(const PolyY& a, const Rational& s) { return a * PolyY(s); }
  static PolyY derivative_y(const PolyY& r) { return r.derivative(); }
};

/// Coefficients of x^0..x^order; products and sums truncate to the smaller order.
template <class R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  explicit TruncatedSeries(int order) : c_(check_order(order) + 1) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check_order(order)) + 1);
  }

  static TruncatedSeries constant(int order, R value) {
    TruncatedSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  static TruncatedSeries one(int order) { return constant(order, R(1)); }
  /// c * x^k (zero if k exceeds the order).
  static TruncatedSeries monomial(int order, int k, R c = R(1)) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!Traits::is_zero(c_[static_cast<std::size_t>(n)])) return n;
    return order() + 1;
  }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series");
    return TruncatedSeries(order, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) c_[static_cast<std::size_t>(n)] += o[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int n = 0; n <= order(); ++n) c_[static_cast<std::size_t>(n)] -= o[n];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& v : a.c_) v = R(0) - v;
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    const int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= order; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (int j = vb; i + j <= order; ++j) {
        if (Traits::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  /// Multiplies every coefficient by a ring element.
  friend TruncatedSeries operator*(const R& s, TruncatedSeries a) {
    for (auto& v : a.c_) v = s * v;
    return a;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<R> c_;
};

using QSeries = TruncatedSeries<Rational>;
using BiSeries = TruncatedSeries<PolyY>;

/// s * x^k, keeping the order of s.
template <class R>
TruncatedSeries<R> shift_by_x_power(const TruncatedSeries<R>& s, int k) {
  if (k < 0) throw DomainError("negative shift");
  TruncatedSeries<R> out(s.order());
  for (int n = 0; n + k <= s.order(); ++n) out[n + k] = s[n];
  return out;
}

/// Exact quotient s / t. The lowest nonzero coefficient of t must be a unit;
/// when t has valuation v > 0, s must have valuation >= v and the result is
/// truncated at min(order) - v.
template <class R>
TruncatedSeries<R> div(const TruncatedSeries<R>& s, const TruncatedSeries<R>& t) {
  using Tr = RingTraits<R>;
  const int order = std::min(s.order(), t.order());
  const int v = t.valuation();
  if (v > t.order()) throw DomainError("division by the zero series");
  if (!Tr::is_unit(t[v])) throw DomainError("leading coefficient of divisor is not a unit");
  if (s.valuation() < v) throw DomainError("dividend valuation is below divisor valuation");
  if (order < v) throw DomainError("series order too small for this division");
  const int out_order = order - v;
  const R inv = Tr::inverse(t[v]);
  TruncatedSeries<R> q(out_order);
  for (int n = 0; n <= out_order; ++n) {
    R acc = s[n + v];
    for (int k = 1; k <= n; ++k)
      if (!Tr::is_zero(t[k + v])) acc -= t[k + v] * q[n - k];
    q[n] = acc * inv;
  }
  return q;
}

/// Exact quotient s / (c x^k): valuation-checked shift, then coefficient-wise
/// exact division by c.
template <class R>
TruncatedSeries<R> div_monomial(const TruncatedSeries<R>& s, int k, const R& c) {
  using Tr = RingTraits<R>;
  if (k < 0) throw DomainError("negative monomial exponent");
  if (s.valuation() < k) throw DomainError("series is not divisible by x^" + std::to_string(k));
  if (s.order() < k) throw DomainError("series order too small for this division");
  TruncatedSeries<R> out(s.order() - k);
  for (int n = 0; n <= out.order(); ++n) out[n] = Tr::exact_div(s[n + k], c);
  return out;
}

/// Square root with constant term 1, by the coefficient recurrence
/// t_n = (s_n - sum_{k=1}^{n-1} t_k t_{n-k}) / 2.
template <class R>
TruncatedSeries<R> sqrt(const TruncatedSeries<R>& s) {
  using Tr = RingTraits<R>;
  if (!(s[0] == R(1))) throw DomainError("sqrt requires constant term 1");
  TruncatedSeries<R> t(s.order());
  t[0] = R(1);
  const Rational half(1, 2);
  for (int n = 1; n <= s.order(); ++n) {
    R acc = s[n];
    for (int k = 1; k < n; ++k) acc -= t[k] * t[n - k];
    t[n] = Tr::scale(acc, half);
  }
  return t;
}

/// d/dx; the result has order one less.
template <class R>
TruncatedSeries<R> derivative_x(const TruncatedSeries<R>& s) {
  if (s.order() == 0) throw DomainError("cannot differentiate an order-0 series");
  TruncatedSeries<R> out(s.order() - 1);
  for (int n = 0; n <= out.order(); ++n) out[n] = RingTraits<R>::scale(s[n + 1], Rational(n + 1));
  return out;
}

/// d/dy, coefficient-wise; zero for rational series.
template <class R>
TruncatedSeries<R> derivative_y(const TruncatedSeries<R>& s) {
  TruncatedSeries<R> out(s.order());
  for (int n = 0; n <= s.order(); ++n) out[n] = RingTraits<R>::derivative_y(s[n]);
  return out;
}

/// s(c x).
template <class R>
TruncatedSeries<R> scale_x(const TruncatedSeries<R>& s, const Rational& c) {
  TruncatedSeries<R> out(s.order());
  Rational p = 1;
  for (int n = 0; n <= s.order(); ++n) {
    out[n] = RingTraits<R>::scale(s[n], p);
    p *= c;
  }
  return out;
}

/// outer(inner) for inner with zero constant term (Horner scheme).
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (!RingTraits<R>::is_zero(inner[0])) throw DomainError("inner series must have zero constant term");
  const int order = std::min(outer.order(), inner.order());
  TruncatedSeries<R> acc(order);
  for (int k = order; k >= 0; --k) {
    acc = acc * inner.truncated(order);
    acc[0] += outer[k];
  }
  return acc;
}

QSeries evaluate_y(const BiSeries& s, const Rational& y);
BiSeries lift(const QSeries& s);

/// Exact coefficient of x^xpow y^ypow. Without ypow the x^xpow coefficient
/// must be free of y. DomainError when out of range.
Rational coeff(const BiSeries& s, int xpow, std::optional<int> ypow = std::nullopt);
Rational coeff(const QSeries& s, int xpow);

/// Coefficient that denotes a count: ConsistencyError unless it is a
/// nonnegative integer.
BigInt count_coeff(const BiSeries& s, int xpow, std::optional<int> ypow = std::nullopt);

// ---------------------------------------------------------------------------
// Catalog of closed-form generating functions.

enum class Gf {
  E,   // 123-avoiders by descents
  G,   // permutations with a 123 pattern whose reduction avoids 123, by descents
  N,   // Narayana numbers
  L,   // 213 analogue of G (x^3 term kept y-free)
  C,   // Catalan numbers
  A3, B3, W3,  // condition <,<
  A4, B4, W4,  // condition <=,<=
  A5, B5, W5,  // condition <=,<
};

std::string_view gf_name(Gf g);
std::optional<Gf> parse_gf(std::string_view name);
const std::vector<Gf>& gf_catalog();
bool is_bivariate(Gf g);

/// Expands the named closed form to order N (>= 1).
BiSeries gf(Gf g, int order);

/// Closed forms with y substituted by a ring element. `y` may be PolyY::y()
/// for the bivariate expansion or a rational for an evaluation.
template <class R>
TruncatedSeries<R> e_closed_form(const R& y, int order);
template <class R>
TruncatedSeries<R> g_closed_form(const R& y, int order);
template <class R>
TruncatedSeries<R> narayana_closed_form(const R& y, int order);
template <class R>
TruncatedSeries<R> l_closed_form(const R& y, int order);

/// G from x + (x-1)E + x^2 y E_x + (xy - xy^2) E_y.
BiSeries g_from_derivative_identity(int order);
/// L from x + (1-y)x^3 + (x-1)N + x^2 y N_x + (xy - xy^2) N_y.
BiSeries l_from_derivative_identity(int order);

QSeries catalan_gf(int order);

}  // namespace woc::series
