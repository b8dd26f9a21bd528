#include "woc/verify.hpp"

#include "woc/bijections.hpp"
#include "woc/errors.hpp"
#include "woc/series.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

namespace woc::verify {

namespace {

using conditions::Condition;
using treesim::LeafTally;

struct Limits {
  int sim_n, oracle_n, series_n, bijection_n, dyck_n, phi_n, weighted_n, gf_order;
};

Limits limits(Scope s) {
  if (s == Scope::Quick) return {7, 6, 15, 5, 6, 6, 8, 12};
  return {9, 7, 30, 6, 8, 7, 10, 20};
}

/// First level where two tallies differ, as text; empty when equal.
std::string first_difference(const LeafTally& x, const LeafTally& y) {
  const int n = std::min(x.n_max, y.n_max);
  for (int j = 1; j <= n; ++j) {
    if (x.a_at(j) != y.a_at(j) || x.delta_at(j) != y.delta_at(j)) {
      std::ostringstream os;
      os << "n=" << j << ": a " << x.a_at(j) << " vs " << y.a_at(j) << ", delta " << x.delta_at(j)
         << " vs " << y.delta_at(j);
      return os.str();
    }
  }
  return {};
}

class Runner {
 public:
  explicit Runner(const Hooks& hooks) : hooks_(hooks) {}

  /// Runs `body`, which returns an empty string on success or a
  /// discrepancy. Exceptions count as failures.
  template <class F>
  void check(std::string name, F&& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (hooks_.on_result) hooks_.on_result(r);
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const Hooks& hooks_;
  std::vector<CheckResult> results_;
};

std::string upto(int n) { return " n<=" + std::to_string(n); }

void engine_checks(Runner& run, const Limits& lim, const Hooks& hooks,
                   std::map<std::string, LeafTally>& sims) {
  for (const Condition& c : conditions::named_conditions()) {
    const std::string name = c.name();
    run.check("sim = formula " + name + upto(lim.sim_n), [&] {
      sims[name] = conditions::sim_tally(c, lim.sim_n, hooks.sim);
      return first_difference(sims[name], conditions::formula_tally(c, lim.sim_n, hooks.formula));
    });
    if (conditions::has_series(c))
      run.check("formula = series " + name + upto(lim.series_n), [&] {
        return first_difference(conditions::formula_tally(c, lim.series_n, hooks.formula),
                                conditions::series_tally(c, lim.series_n));
      });
    run.check("oracle = sim " + name + upto(lim.oracle_n), [&] {
      return first_difference(treesim::oracle_tally(c.pattern, lim.oracle_n),
                              treesim::tally(c.pattern, lim.oracle_n, hooks.sim));
    });
  }

  run.check("kequal:2 = tie" + upto(lim.sim_n), [&] {
    return first_difference(conditions::formula_tally(conditions::parse_condition("kequal:2"), lim.sim_n),
                            conditions::formula_tally(conditions::parse_condition("tie"), lim.sim_n));
  });

  run.check("w_n <= f_n, equality iff b_{n-1} = 0" + upto(lim.sim_n), [&]() -> std::string {
    for (const auto& [name, t] : sims) {
      for (int n = 1; n <= t.n_max; ++n) {
        const BigInt f = counting::fubini(n);
        const BigInt prev_b = n == 1 ? BigInt(0) : t.b_at(n - 1);
        if (t.w_at(n) > f || ((t.w_at(n) == f) != (prev_b == 0)))
          return name + " fails at n=" + std::to_string(n);
      }
    }
    return {};
  });

  run.check("<,= recurrence = closed form n<=25", []() -> std::string {
    for (int n = 1; n <= 25; ++n)
      if (counting::delta_lt_eq_recurrence(n) != counting::delta_lt_eq_closed(n))
        return "n=" + std::to_string(n);
    return {};
  });
}

std::string compare_series(const series::BiSeries& x, const series::BiSeries& y, int from, int order) {
  for (int n = from; n <= order; ++n)
    if (!(x[n] == y[n])) return "coefficient of x^" + std::to_string(n) + " differs";
  return {};
}

void series_checks(Runner& run, const Limits& lim) {
  using namespace series;
  const int order = lim.gf_order;
  run.check("G derivative identity = closed form to order 12", [] {
    return compare_series(g_from_derivative_identity(12), gf(Gf::G, 12), 0, 12);
  });
  run.check("L derivative identity = closed form to order 12", [] {
    return compare_series(l_from_derivative_identity(12), gf(Gf::L, 12), 0, 12);
  });
  run.check("E(x,2) = C(2x(1-x))/2 for n>=1 to order " + std::to_string(order), [&] {
    const auto inner = Rational(2) * QSeries::monomial(order, 1) - Rational(2) * QSeries::monomial(order, 2);
    const auto rhs = Rational(1, 2) * compose(catalan_gf(order), inner);
    return compare_series(lift(e_closed_form(Rational(2), order)), lift(rhs), 1, order);
  });
  run.check("1 + A4 = C(x(1+x)) to order " + std::to_string(order), [&] {
    const auto inner = QSeries::monomial(order, 1) + QSeries::monomial(order, 2);
    const auto lhs = QSeries::one(order) + evaluate_y(gf(Gf::A4, order), 0);
    return compare_series(lift(lhs), lift(compose(catalan_gf(order), inner)), 0, order);
  });
  run.check("sqrt round trip on 100 random series", []() -> std::string {
    std::mt19937 rng(20241016);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
      QSeries s(10);
      s[0] = Rational(1);
      for (int k = 1; k <= 10; ++k) s[k] = Rational(num(rng), den(rng));
      const auto sq = s * s;
      const auto r = sqrt(sq);
      if (!(r * r == sq)) return "trial " + std::to_string(trial);
    }
    return {};
  });
}

template <class Decode, class Encode>
std::string colored_bijection(bijections::Variant v, const StoppingPattern& p, int n_max,
                              Decode decode, Encode encode) {
  for (int n = 1; n <= n_max; ++n) {
    std::set<WeakOrderChain> image;
    const auto all = bijections::all_colorings(v, n);
    for (const auto& cp : all) {
      const WeakOrderChain c = decode(cp);
      if (!image.insert(c).second) return "decode not injective at " + cp.to_string();
      if (!(encode(c) == cp)) return "round trip fails at " + cp.to_string();
    }
    const auto active = treesim::enumerate_leaves(p, n, treesim::LeafKind::Active);
    if (std::set<WeakOrderChain>(active.begin(), active.end()) != image)
      return "image differs from active set at n=" + std::to_string(n);
  }
  return {};
}

void bijection_checks(Runner& run, const Limits& lim, const Hooks& hooks) {
  namespace bj = bijections;
  const StoppingPattern weak({Relation::Le, Relation::Le});
  const StoppingPattern mixed({Relation::Le, Relation::Lt});

  run.check("UDD colorings <-> active <=,<=" + upto(lim.bijection_n), [&] {
    return colored_bijection(bj::Variant::Sec4, weak, lim.bijection_n, bj::prop41_decode, bj::prop41_encode);
  });
  run.check("marked valleys <-> active <=,<" + upto(lim.bijection_n), [&] {
    return colored_bijection(bj::Variant::Sec5, mixed, lim.bijection_n, bj::prop51_decode, bj::prop51_encode);
  });

  run.check("Dyck paths <-> 321-avoiders" + upto(lim.dyck_n), [&]() -> std::string {
    const Permutation p321({3, 2, 1});
    for (int n = 1; n <= lim.dyck_n; ++n) {
      std::set<Permutation> image;
      for (const auto& path : bj::all_dyck_paths(n)) {
        const Permutation s = bj::dyck_to_321avoider(path);
        if (contains_perm_pattern(s, p321)) return s.to_string() + " contains 321";
        if (!image.insert(s).second) return "duplicate " + s.to_string();
        if (!(bj::avoider321_to_dyck(s) == path)) return "inverse fails at " + path.word();
      }
      if (BigInt(image.size()) != counting::catalan(n)) return "image size at n=" + std::to_string(n);
    }
    return {};
  });

  run.check("phi round trip and weighted image" + upto(lim.phi_n), [&]() -> std::string {
    const Permutation p213({2, 1, 3}), p123({1, 2, 3});
    const counting::NarayanaFn fn =
        hooks.formula.narayana ? hooks.formula.narayana : counting::NarayanaFn(counting::narayana);
    for (int n = 3; n <= lim.phi_n; ++n) {
      std::set<std::pair<Permutation, std::vector<int>>> seen;
      std::map<Permutation, std::size_t> per_perm;
      for (const auto& c : treesim::enumerate_leaves(mixed, n, treesim::LeafKind::InactiveAtN)) {
        const auto sigma = chain_to_underlined(c, BlockLayout::Decreasing);
        std::vector<int> rest(sigma.perm().entries().begin(), sigma.perm().entries().end());
        std::erase(rest, n);
        const Permutation reduced(rest);
        std::vector<int> rest_bridges;  // bridges of sigma' after deleting n
        const int at = static_cast<int>(std::find(sigma.perm().entries().begin(), sigma.perm().entries().end(), n) -
                                        sigma.perm().entries().begin()) + 1;
        for (int b : sigma.bridges())
          if (b != at && b != at - 1) rest_bridges.push_back(b < at ? b : b - 1);
        const UnderlinedPermutation sigma_reduced(reduced, rest_bridges, BlockLayout::Free);
        const bool n_in_pattern = bj::underlined_213_ends_at_max(sigma) ||
                                  contains_pattern(c, StoppingPattern({Relation::Lt, Relation::Lt}));
        if (!n_in_pattern || contains_perm_pattern(reduced, p123) || bj::contains_underlined_213(sigma_reduced))
          return "sigma_w shape at " + format_chain(c);

        const auto u = bj::phi(c);
        if (!(bj::phi_inverse(u) == c)) return "round trip fails at " + format_chain(c);
        if (!seen.emplace(u.perm(), u.bridges()).second) return "phi not injective at " + format_chain(c);
        const auto des = descents(u.perm());
        for (int b : u.bridges())
          if (!std::binary_search(des.begin(), des.end(), b)) return "bridge off a descent in " + u.to_string();
        std::vector<int> out_rest(u.perm().entries().begin(), u.perm().entries().end());
        std::erase(out_rest, n);
        if (!contains_perm_pattern(u.perm(), p213) || contains_perm_pattern(Permutation(out_rest), p213))
          return "image outside G(213): " + u.to_string();
        ++per_perm[u.perm()];
      }
      for (const auto& [perm, count] : per_perm)
        if (BigInt(count) != pow2(static_cast<int>(descents(perm).size())))
          return "underline choices incomplete for " + perm.to_string();
      if (BigInt(seen.size()) != counting::counts_leq_lt(n, fn).delta)
        return "image size differs from sum 2^d l_{n,d} at n=" + std::to_string(n);
    }
    return {};
  });

  run.check("colored path weights = active counts" + upto(lim.weighted_n), [&]() -> std::string {
    const counting::NarayanaFn fn =
        hooks.formula.narayana ? hooks.formula.narayana : counting::NarayanaFn(counting::narayana);
    for (int n = 1; n <= lim.weighted_n; ++n) {
      if (bj::weighted_count(bj::Variant::Sec3, n) != counting::counts_123(n).a) return "DU/DDD at n=" + std::to_string(n);
      if (bj::weighted_count(bj::Variant::Sec4, n) != counting::counts_leq_leq(n).a) return "UDD at n=" + std::to_string(n);
      if (bj::weighted_count(bj::Variant::Sec5, n) != counting::counts_leq_lt(n, fn).a) return "valleys at n=" + std::to_string(n);
    }
    return {};
  });
}

}  // namespace

std::vector<CheckResult> run(Scope scope, const Hooks& hooks) {
  const Limits lim = limits(scope);
  Runner runner(hooks);
  std::map<std::string, LeafTally> sims;
  engine_checks(runner, lim, hooks, sims);
  series_checks(runner, lim);
  bijection_checks(runner, lim, hooks);
  return runner.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace woc::verify
