#include "woc/series.hpp"

#include <array>
#include <utility>

namespace woc::series {

// ---------------------------------------------------------------------------
// PolyY

PolyY::PolyY(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

PolyY::PolyY(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyY PolyY::monomial(Rational c, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return PolyY(std::move(v));
}

void PolyY::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational PolyY::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return c_[static_cast<std::size_t>(d)];
}

PolyY PolyY::derivative() const {
  std::vector<Rational> v;
  for (std::size_t d = 1; d < c_.size(); ++d) v.push_back(c_[d] * static_cast<long>(d));
  return PolyY(std::move(v));
}

Rational PolyY::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

std::string PolyY::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    if (c_[d] == 0) continue;
    if (!out.empty()) out += " + ";
    out += woc::to_string(c_[d]);
    if (d >= 1) out += "*y";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

PolyY& PolyY::operator+=(const PolyY& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
  normalize();
  return *this;
}

PolyY& PolyY::operator-=(const PolyY& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
  normalize();
  return *this;
}

PolyY operator-(PolyY a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyY(std::move(v));
}

PolyY exact_div(const PolyY& num, const PolyY& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const Rational lead = den.coeff(dd);
  if (num.degree() < dd) {
    if (num.is_zero()) return {};
    throw DomainError("polynomial division leaves a remainder");
  }
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd) + 1);
  for (int k = num.degree() - dd; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * den.coeff(j);
  }
  for (const auto& r : rem)
    if (r != 0) throw DomainError("polynomial division leaves a remainder");
  return PolyY(std::move(q));
}

// ---------------------------------------------------------------------------
// Conversions and coefficient access

QSeries evaluate_y(const BiSeries& s, const Rational& y) {
  QSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out[n] = s[n].evaluate(y);
  return out;
}

BiSeries lift(const QSeries& s) {
  BiSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out[n] = PolyY(s[n]);
  return out;
}

Rational coeff(const BiSeries& s, int xpow, std::optional<int> ypow) {
  if (xpow < 0 || xpow > s.order())
    throw DomainError("x exponent " + std::to_string(xpow) + " outside 0.." + std::to_string(s.order()));
  const PolyY& c = s[xpow];
  if (ypow) {
    if (*ypow < 0) throw DomainError("negative y exponent");
    return c.coeff(*ypow);
  }
  if (c.degree() > 0) throw DomainError("coefficient depends on y; give a y exponent");
  return c.coeff(0);
}

Rational coeff(const QSeries& s, int xpow) {
  if (xpow < 0 || xpow > s.order())
    throw DomainError("x exponent " + std::to_string(xpow) + " outside 0.." + std::to_string(s.order()));
  return s[xpow];
}

BigInt count_coeff(const BiSeries& s, int xpow, std::optional<int> ypow) {
  const Rational c = coeff(s, xpow, ypow);
  if (denominator(c) != 1 || c < 0)
    throw ConsistencyError("coefficient of x^" + std::to_string(xpow) + " is not a count: " +
                           woc::to_string(c));
  return numerator(c);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

template <class R>
TruncatedSeries<R> poly(int order, std::vector<R> coeffs) {
  if (static_cast<int>(coeffs.size()) > order + 1) coeffs.resize(static_cast<std::size_t>(order) + 1);
  return TruncatedSeries<R>(order, std::move(coeffs));
}

/// 1 - 4xy(1 + x - xy), the radicand shared by E and G.
template <class R>
TruncatedSeries<R> e_radicand(const R& y, int order) {
  return poly<R>(order, {R(1), R(-4) * y, R(-4) * y * (R(1) - y)});
}

/// 1 - 2x(y+1) + x^2(y-1)^2, the Narayana radicand.
template <class R>
TruncatedSeries<R> n_radicand(const R& y, int order) {
  const R ym1 = y - R(1);
  return poly<R>(order, {R(1), R(-2) * (y + R(1)), ym1 * ym1});
}

}  // namespace

template <class R>
TruncatedSeries<R> e_closed_form(const R& y, int order) {
  const int m = order + 1;
  const auto one = TruncatedSeries<R>::one(m);
  const auto q = poly<R>(m, {R(1), R(1) - y});                // 1 + x - xy
  const auto u = poly<R>(m, {R(0), y, y * (R(1) - y)});       // xy(1 + x - xy)
  const auto s = sqrt(e_radicand(y, m));
  const auto num = one - R(2) * u - s;
  return div_monomial(div(num, q), 1, R(2) * y * y);
}

template <class R>
TruncatedSeries<R> g_closed_form(const R& y, int order) {
  const int m = order + 1;
  const auto one = TruncatedSeries<R>::one(m);
  const auto u = poly<R>(m, {R(0), y, y * (R(1) - y)});
  const auto s = sqrt(e_radicand(y, m));
  const auto two_x2y = TruncatedSeries<R>::monomial(m, 2, R(2) * y);
  const auto one_minus_2xy = poly<R>(m, {R(1), R(-2) * y});
  const auto num = one - R(4) * u + two_x2y - one_minus_2xy * s;
  return div_monomial(div(num, s), 1, R(2) * y * y);
}

template <class R>
TruncatedSeries<R> narayana_closed_form(const R& y, int order) {
  const int m = order + 1;
  const auto r = sqrt(n_radicand(y, m));
  const auto num = poly<R>(m, {R(1), R(0) - (y + R(1))}) - r;
  return div_monomial(num, 1, R(2) * y);
}

template <class R>
TruncatedSeries<R> l_closed_form(const R& y, int order) {
  // Both fractions share the denominator 2xy; over the common denominator
  // 2xy*r the numerator is a power series.
  const int m = order + 1;
  const auto r = sqrt(n_radicand(y, m));
  auto first = poly<R>(m, {R(-1), y + R(1)});
  first -= TruncatedSeries<R>::monomial(m, 4, R(2) * (y * y - y));
  // (1 - xy)^2 + x^2 - 2x
  const auto second = poly<R>(m, {R(1), R(-2) * y - R(2), y * y + R(1)});
  const auto num = first * r + second;
  return div_monomial(div(num, r), 1, R(2) * y);
}

template QSeries e_closed_form<Rational>(const Rational&, int);
template BiSeries e_closed_form<PolyY>(const PolyY&, int);
template QSeries g_closed_form<Rational>(const Rational&, int);
template BiSeries g_closed_form<PolyY>(const PolyY&, int);
template QSeries narayana_closed_form<Rational>(const Rational&, int);
template BiSeries narayana_closed_form<PolyY>(const PolyY&, int);
template QSeries l_closed_form<Rational>(const Rational&, int);
template BiSeries l_closed_form<PolyY>(const PolyY&, int);

BiSeries g_from_derivative_identity(int order) {
  const PolyY y = PolyY::y();
  const auto e = e_closed_form(y, order + 1);
  const auto ex = derivative_x(e);  // order `order`
  const auto ey = derivative_y(e);
  auto g = BiSeries::monomial(order, 1);
  g += poly<PolyY>(order, {PolyY(-1), PolyY(1)}) * e;
  g += BiSeries::monomial(order, 2, y) * ex;
  g += BiSeries::monomial(order, 1, y - y * y) * ey;
  return g;
}

BiSeries l_from_derivative_identity(int order) {
  const PolyY y = PolyY::y();
  const auto nar = narayana_closed_form(y, order + 1);
  const auto nx = derivative_x(nar);
  const auto ny = derivative_y(nar);
  auto l = BiSeries::monomial(order, 1);
  l += BiSeries::monomial(order, 3, PolyY(1) - y);
  l += poly<PolyY>(order, {PolyY(-1), PolyY(1)}) * nar;
  l += BiSeries::monomial(order, 2, y) * nx;
  l += BiSeries::monomial(order, 1, y - y * y) * ny;
  return l;
}

QSeries catalan_gf(int order) {
  const int m = order + 1;
  const auto s = sqrt(poly<Rational>(m, {1, -4}));
  return div_monomial(QSeries::one(m) - s, 1, Rational(2));
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

constexpr std::array<std::pair<Gf, std::string_view>, 14> kNames{{
    {Gf::E, "E"},   {Gf::G, "G"},   {Gf::N, "N"},   {Gf::L, "L"},   {Gf::C, "C"},
    {Gf::A3, "A3"}, {Gf::B3, "B3"}, {Gf::W3, "W3"}, {Gf::A4, "A4"}, {Gf::B4, "B4"},
    {Gf::W4, "W4"}, {Gf::A5, "A5"}, {Gf::B5, "B5"}, {Gf::W5, "W5"},
}};

QSeries one_minus_x(int order) { return poly<Rational>(order, {1, -1}); }

QSeries w3(int order) {
  const int m = order + 1;
  const auto r = sqrt(poly<Rational>(m, {1, -8, 8}));
  const auto x = QSeries::monomial(m, 1);
  const auto num = x + x * r;
  const auto den = Rational(2) * (one_minus_x(m) * r);
  return div(num, den).truncated(order);
}

QSeries w4(int order) {
  const int m = order;
  const auto one_minus_x2 = poly<Rational>(m, {1, 0, -1});
  const auto r = sqrt(poly<Rational>(m, {1, -4, -4}));
  const auto first = div(QSeries::monomial(m, 1), one_minus_x2);
  const auto second = div(poly<Rational>(m, {1, -2, -2}), one_minus_x2 * r);
  return first + second - QSeries::one(m);
}

QSeries w5(int order) {
  const int m = order;
  const auto r = sqrt(poly<Rational>(m, {1, -6, 1}));
  const auto omx = one_minus_x(m);
  const auto num = omx * omx - poly<Rational>(m, {1, -3}) * r;
  return div(num, Rational(4) * (omx * r));
}

}  // namespace

std::string_view gf_name(Gf g) {
  for (const auto& [k, name] : kNames)
    if (k == g) return name;
  return "?";
}

std::optional<Gf> parse_gf(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<Gf>& gf_catalog() {
  static const std::vector<Gf> all = [] {
    std::vector<Gf> v;
    for (const auto& [k, n] : kNames) v.push_back(k);
    return v;
  }();
  return all;
}

bool is_bivariate(Gf g) { return g == Gf::E || g == Gf::G || g == Gf::N || g == Gf::L; }

BiSeries gf(Gf g, int order) {
  if (order < 1) throw DomainError("generating function order must be >= 1");
  const Rational two = 2, half(1, 2);
  switch (g) {
    case Gf::E: return e_closed_form(PolyY::y(), order);
    case Gf::G: return g_closed_form(PolyY::y(), order);
    case Gf::N: return narayana_closed_form(PolyY::y(), order);
    case Gf::L: return l_closed_form(PolyY::y(), order);
    case Gf::C: return lift(catalan_gf(order));
    case Gf::A3: return lift(e_closed_form(two, order));
    case Gf::B3: return lift(div(g_closed_form(two, order), one_minus_x(order)));
    case Gf::W3: return lift(w3(order));
    case Gf::A4: return lift(half * scale_x(e_closed_form(half, order), two));
    case Gf::B4:
      return lift(div(half * scale_x(g_closed_form(half, order), two), one_minus_x(order)));
    case Gf::W4: return lift(w4(order));
    case Gf::A5: return lift(narayana_closed_form(two, order));
    case Gf::B5: {
      const auto l = l_closed_form(two, order);
      return lift(div(QSeries::monomial(order, 3) + l, one_minus_x(order)));
    }
    case Gf::W5: return lift(w5(order));
  }
  throw DomainError("unknown generating function");
}

}  // namespace woc::series
