#include "woc/conditions.hpp"

#include "woc/errors.hpp"
#include "woc/series.hpp"

#include <algorithm>
#include <charconv>

namespace woc::conditions {

namespace {

struct Alias {
  std::string_view name;
  Family family;
  std::string_view relations;
};

constexpr Alias kAliases[] = {
    {"tie", Family::Tie, "="},
    {"lt", Family::Lt, "<"},
    {"le", Family::Le, "<="},
    {"strict123", Family::Strict123, "<,<"},
    {"weak123", Family::Weak123, "<=,<="},
    {"mixed123", Family::Mixed123, "<=,<"},
    {"lt-eq", Family::LtEq, "<,="},
    {"le-eq", Family::LeEq, "<=,="},
};

StoppingPattern k_equal_pattern(int k) {
  return StoppingPattern(std::vector<Relation>(static_cast<std::size_t>(k - 1), Relation::Eq));
}

Condition classify(StoppingPattern p) {
  Condition c;
  for (const auto& a : kAliases)
    if (StoppingPattern::parse(a.relations) == p) {
      c.family = a.family;
      c.pattern = std::move(p);
      return c;
    }
  const auto rels = p.relations();
  if (std::all_of(rels.begin(), rels.end(), [](Relation r) { return r == Relation::Eq; })) {
    c.family = Family::KEqual;
    c.k = static_cast<int>(p.arity());
  }
  c.pattern = std::move(p);
  return c;
}

treesim::LeafTally from_triples(int n_max, auto&& triple_at) {
  std::vector<BigInt> a, delta;
  std::vector<BigInt> w;
  for (int n = 1; n <= n_max; ++n) {
    counting::CountTriple t = triple_at(n);
    a.push_back(t.a);
    delta.push_back(t.delta);
    w.push_back(t.w);
  }
  auto tally = treesim::LeafTally::from_counts(std::move(a), std::move(delta));
  if (tally.w != w) throw ConsistencyError("formula totals disagree with summed increments");
  return tally;
}

std::optional<std::pair<series::Gf, series::Gf>> series_pair(Family f) {
  using series::Gf;
  switch (f) {
    case Family::Strict123: return std::pair{Gf::A3, Gf::B3};
    case Family::Weak123: return std::pair{Gf::A4, Gf::B4};
    case Family::Mixed123: return std::pair{Gf::A5, Gf::B5};
    default: return std::nullopt;
  }
}

series::Gf total_series(Family f) {
  using series::Gf;
  return f == Family::Strict123 ? Gf::W3 : f == Family::Weak123 ? Gf::W4 : Gf::W5;
}

}  // namespace

std::string Condition::name() const {
  if (family == Family::KEqual) return "kequal:" + std::to_string(k);
  for (const auto& a : kAliases)
    if (a.family == family) return std::string(a.name);
  return pattern.to_string();
}

Condition parse_condition(std::string_view text) {
  for (const auto& a : kAliases)
    if (a.name == text) return classify(StoppingPattern::parse(a.relations));
  constexpr std::string_view kequal = "kequal:";
  if (text.substr(0, kequal.size()) == kequal) {
    int k = 0;
    const char* first = text.data() + kequal.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last || k < 2 || k > 64)
      throw ParseError(kequal.size(), "kequal needs an integer K with 2 <= K <= 64");
    Condition c;
    c.family = Family::KEqual;
    c.k = k;
    c.pattern = k_equal_pattern(k);
    return c;
  }
  if (text.find_first_not_of("<=, ") != std::string_view::npos)
    throw ParseError(text.find_first_not_of("<=, "), "unknown condition '" + std::string(text) + "'");
  return classify(StoppingPattern::parse(text));
}

std::vector<Condition> named_conditions() {
  std::vector<Condition> out;
  for (const auto& a : kAliases) out.push_back(parse_condition(a.name));
  out.insert(out.begin() + 6, parse_condition("kequal:3"));
  return out;
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Sim: return "sim";
    case Engine::Formula: return "formula";
    case Engine::Series: return "series";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view text) {
  for (Engine e : {Engine::Sim, Engine::Formula, Engine::Series})
    if (engine_name(e) == text) return e;
  return std::nullopt;
}

bool has_formula(const Condition& c) { return c.family != Family::Other; }
bool has_series(const Condition& c) { return series_pair(c.family).has_value(); }

treesim::LeafTally sim_tally(const Condition& c, int n_max, const treesim::Options& opts) {
  return treesim::tally(c.pattern, n_max, opts);
}

treesim::LeafTally formula_tally(const Condition& c, int n_max, const FormulaHooks& hooks) {
  using namespace counting;
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
  switch (c.family) {
    case Family::Tie: return from_triples(n_max, [](int n) { return size2_counts(Size2Kind::Tie, n); });
    case Family::Lt: return from_triples(n_max, [](int n) { return size2_counts(Size2Kind::Lt, n); });
    case Family::Le: return from_triples(n_max, [](int n) { return size2_counts(Size2Kind::Le, n); });
    case Family::Strict123: return from_triples(n_max, counts_123);
    case Family::Weak123: return from_triples(n_max, counts_leq_leq);
    case Family::Mixed123: {
      const NarayanaFn fn = hooks.narayana ? hooks.narayana : NarayanaFn(narayana);
      return from_triples(n_max, [&](int n) { return counts_leq_lt(n, fn); });
    }
    case Family::KEqual: return from_triples(n_max, [&](int n) { return counts_kequal(c.k, n); });
    case Family::LtEq: return from_triples(n_max, counts_lt_eq);
    case Family::LeEq: return from_triples(n_max, counts_le_eq);
    case Family::Other: break;
  }
  throw PreconditionError("no formula for condition " + c.name());
}

treesim::LeafTally series_tally(const Condition& c, int n_max) {
  const auto pair = series_pair(c.family);
  if (!pair) throw PreconditionError("no series for condition " + c.name());
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
  const auto A = series::gf(pair->first, n_max);
  const auto B = series::gf(pair->second, n_max);
  const auto W = series::gf(total_series(c.family), n_max);
  std::vector<BigInt> a, delta;
  BigInt prev_b = 0;
  for (int n = 1; n <= n_max; ++n) {
    a.push_back(series::count_coeff(A, n));
    const BigInt b = series::count_coeff(B, n);
    delta.push_back(b - prev_b);
    prev_b = b;
    if (a.back() + b != series::count_coeff(W, n))
      throw ConsistencyError("A + B differs from W at x^" + std::to_string(n));
  }
  return treesim::LeafTally::from_counts(std::move(a), std::move(delta));
}

treesim::LeafTally run_engine(Engine e, const Condition& c, int n_max, const treesim::Options& opts) {
  switch (e) {
    case Engine::Sim: return sim_tally(c, n_max, opts);
    case Engine::Formula: return formula_tally(c, n_max);
    case Engine::Series: return series_tally(c, n_max);
  }
  throw PreconditionError("unknown engine");
}

}  // namespace woc::conditions
