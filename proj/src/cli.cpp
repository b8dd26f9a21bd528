#include "woc/cli.hpp"

#include "woc/conditions.hpp"
#include "woc/errors.hpp"
#include "woc/series.hpp"
#include "woc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

namespace woc::cli {

namespace {

using nlohmann::json;
using conditions::Condition;
using conditions::Engine;
using treesim::LeafTally;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountArgs {
  std::string condition;
  int n_max = 0;
  std::string engine = "auto";
  std::string format = "tsv";
  std::uint64_t frontier_cap = treesim::Options{}.frontier_cap;
  unsigned threads = 0;
};

struct EnumerateArgs {
  std::string condition;
  int n = 0;
  std::string which = "active";
  std::uint64_t frontier_cap = 10'000'000;
  unsigned threads = 0;
};

struct SeriesArgs {
  std::string name;
  int order = 10;
  std::string format = "tsv";
  bool list = false;
};

struct VerifyArgs {
  std::string scope = "quick";
  unsigned threads = 0;
};

Condition condition_or_usage(const std::string& text) {
  try {
    return conditions::parse_condition(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --condition: ") + e.what());
  }
}

void write_tsv(std::ostream& out, const LeafTally& t) {
  out << "n\ta\tdelta\tb\tw\n";
  for (int n = 1; n <= t.n_max; ++n)
    out << n << '\t' << t.a_at(n) << '\t' << t.delta_at(n) << '\t' << t.b_at(n) << '\t' << t.w_at(n) << '\n';
}

json rows_json(const LeafTally& t) {
  json rows = json::array();
  for (int n = 1; n <= t.n_max; ++n)
    rows.push_back({{"n", n},
                    {"a", to_string(t.a_at(n))},
                    {"delta", to_string(t.delta_at(n))},
                    {"b", to_string(t.b_at(n))},
                    {"w", to_string(t.w_at(n))}});
  return rows;
}

int cmd_count(const CountArgs& args, std::ostream& out) {
  const Condition c = condition_or_usage(args.condition);
  std::vector<Engine> engines;
  if (args.engine == "all") {
    engines.push_back(Engine::Sim);
    if (conditions::has_formula(c)) engines.push_back(Engine::Formula);
    if (conditions::has_series(c)) engines.push_back(Engine::Series);
  } else if (args.engine == "auto") {
    engines.push_back(conditions::has_formula(c) ? Engine::Formula : Engine::Sim);
  } else {
    const Engine e = *conditions::parse_engine(args.engine);
    if (e == Engine::Formula && !conditions::has_formula(c))
      throw UsageError("no formula engine for condition " + c.name());
    if (e == Engine::Series && !conditions::has_series(c))
      throw UsageError("no series engine for condition " + c.name() +
                       " (series exist for strict123, weak123, mixed123)");
    engines.push_back(e);
  }

  treesim::Options opts;
  opts.frontier_cap = args.frontier_cap;
  opts.threads = args.threads;
  std::vector<LeafTally> tallies;
  for (Engine e : engines) tallies.push_back(conditions::run_engine(e, c, args.n_max, opts));
  const bool compare = args.engine == "all";
  const bool match = std::all_of(tallies.begin(), tallies.end(),
                                 [&](const LeafTally& t) { return t == tallies.front(); });

  if (args.format == "json") {
    json doc{{"condition", c.name()}, {"relations", c.pattern.to_string()}};
    json blocks = json::array();
    for (std::size_t i = 0; i < engines.size(); ++i)
      blocks.push_back({{"engine", conditions::engine_name(engines[i])}, {"rows", rows_json(tallies[i])}});
    doc["engines"] = std::move(blocks);
    if (compare) doc["match"] = match;
    out << doc.dump(2) << '\n';
  } else if (!compare) {
    write_tsv(out, tallies.front());
  } else {
    for (std::size_t i = 0; i < engines.size(); ++i) {
      out << "# engine: " << conditions::engine_name(engines[i]) << '\n';
      write_tsv(out, tallies[i]);
    }
    out << "# match: " << (match ? "true" : "false") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const Condition c = condition_or_usage(args.condition);
  treesim::LeafKind kind = treesim::LeafKind::Active;
  if (args.which == "inactive") kind = treesim::LeafKind::Inactive;
  else if (args.which == "inactive-at-n") kind = treesim::LeafKind::InactiveAtN;
  treesim::Options opts;
  opts.frontier_cap = args.frontier_cap;
  opts.threads = args.threads;
  treesim::for_each_leaf(c.pattern, args.n, kind,
                         [&](const WeakOrderChain& w) { out << format_chain(w) << '\n'; }, opts);
  return kExitOk;
}

int cmd_series(const SeriesArgs& args, std::ostream& out) {
  if (args.list) {
    for (series::Gf g : series::gf_catalog())
      out << series::gf_name(g) << '\t' << (series::is_bivariate(g) ? "bivariate" : "univariate") << '\n';
    return kExitOk;
  }
  if (args.name.empty()) throw UsageError("series needs a NAME (see --list)");
  const auto g = series::parse_gf(args.name);
  if (!g) throw UsageError("unknown series '" + args.name + "' (see --list)");
  const auto s = series::gf(*g, args.order);
  const bool bivariate = series::is_bivariate(*g);

  json rows = json::array();
  if (args.format == "tsv") out << (bivariate ? "n\td\tcoeff\n" : "n\tcoeff\n");
  for (int n = 0; n <= args.order; ++n) {
    if (!bivariate) {
      const std::string v = to_string(series::coeff(s, n));
      if (args.format == "tsv") out << n << '\t' << v << '\n';
      else rows.push_back({{"n", n}, {"coeff", v}});
      continue;
    }
    for (int d = 0; d <= s[n].degree(); ++d) {
      const Rational v = s[n].coeff(d);
      if (v == 0) continue;
      if (args.format == "tsv") out << n << '\t' << d << '\t' << to_string(v) << '\n';
      else rows.push_back({{"n", n}, {"d", d}, {"coeff", to_string(v)}});
    }
  }
  if (args.format == "json")
    out << json{{"series", series::gf_name(*g)}, {"order", args.order}, {"rows", rows}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  verify::Hooks hooks;
  hooks.sim.threads = args.threads;
  int failed = 0;
  hooks.on_result = [&](const verify::CheckResult& r) {
    if (r.passed) {
      out << "PASS  " << r.name << '\n';
    } else {
      ++failed;
      out << "FAIL  " << r.name << ": " << r.detail << '\n';
    }
    out.flush();
  };
  const auto results = verify::run(args.scope == "all" ? verify::Scope::All : verify::Scope::Quick, hooks);
  out << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " checks passed\n";
  return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leaf counts for restricted weak-ordering chain trees", "woc"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"tsv", "json"};

  CountArgs count;
  auto* c = app.add_subcommand("count", "Per-level leaf counts (n, a, delta, b, w)");
  c->add_option("--condition", count.condition, "Alias or relation string such as \"<=,<\"")->required();
  c->add_option("--n-max", count.n_max, "Deepest level")->required()->check(CLI::Range(1, 64));
  c->add_option("--engine", count.engine, "sim, formula, series, all (default: formula when available)")
      ->check(CLI::IsMember({"auto", "sim", "formula", "series", "all"}));
  c->add_option("--format", count.format)->check(CLI::IsMember(formats));
  c->add_option("--frontier-cap", count.frontier_cap, "Largest active frontier the simulator may hold");
  c->add_option("--threads", count.threads, "Simulator threads (0 = all cores)");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List leaves of the order-n tree");
  e->add_option("--condition", en.condition)->required();
  e->add_option("--n", en.n, "Tree depth")->required()->check(CLI::Range(1, 64));
  e->add_option("--which", en.which, "active, inactive (all levels), inactive-at-n")
      ->check(CLI::IsMember({"active", "inactive", "inactive-at-n"}));
  e->add_option("--frontier-cap", en.frontier_cap);
  e->add_option("--threads", en.threads);

  SeriesArgs se;
  auto* s = app.add_subcommand("series", "Coefficients of a catalog generating function");
  s->add_option("name", se.name, "Catalog name (E, G, N, L, C, A3..W5)");
  s->add_option("--order", se.order, "Highest power of x")->check(CLI::Range(0, 400));
  s->add_option("--format", se.format)->check(CLI::IsMember(formats));
  s->add_flag("--list", se.list, "List catalog names");

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Cross-engine and bijection checks");
  v->add_option("--scope", ve.scope, "quick or all")->check(CLI::IsMember({"quick", "all"}));
  v->add_option("--threads", ve.threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return cmd_count(count, out);
    if (*e) return cmd_enumerate(en, out);
    if (*s) return cmd_series(se, out);
    return cmd_verify(ve, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& ex) {
    err << "mismatch: " << ex.what() << '\n';
    return kExitMismatch;
  } catch (const ResourceLimitError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitResource;
  }
}

}  // namespace woc::cli
