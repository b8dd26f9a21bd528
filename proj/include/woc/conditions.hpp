#pragma once

// The named stopping conditions and the three engines that count
// leaves for them: the tree simulator, the closed formulas, and series
// coefficients.

#include "woc/core.hpp"
#include "woc/counting.hpp"
#include "woc/treesim.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace woc::conditions {

enum class Family { Tie, Lt, Le, Strict123, Weak123, Mixed123, KEqual, LtEq, LeEq, Other };

struct Condition {
  Family family = Family::Other;
  int k = 0;  // block size bound for KEqual
  StoppingPattern pattern{{Relation::Eq}};

  /// Alias when one exists ("strict123", "kequal:4"), else the relation string.
  std::string name() const;
};

/// Accepts an alias (tie, lt, le, strict123, weak123, mixed123, kequal:K,
/// lt-eq, le-eq) or a relation string such as "<=,<". A relation string that
/// spells a named condition is recognized as that condition.
/// Throws ParseError on malformed input.
Condition parse_condition(std::string_view text);

/// The nine named conditions, with k = 3 for the k-equal family.
std::vector<Condition> named_conditions();

enum class Engine { Sim, Formula, Series };

std::string_view engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view text);

bool has_formula(const Condition& c);
bool has_series(const Condition& c);

struct FormulaHooks {
  /// Replaces the Narayana numbers used by the <=,< formulas.
  counting::NarayanaFn narayana;
};

/// Levels 1..n_max by the tree simulator.
treesim::LeafTally sim_tally(const Condition& c, int n_max, const treesim::Options& opts = {});
/// Levels 1..n_max from the closed formulas. PreconditionError without one.
treesim::LeafTally formula_tally(const Condition& c, int n_max, const FormulaHooks& hooks = {});
/// Levels 1..n_max from the A and B series. PreconditionError without one.
treesim::LeafTally series_tally(const Condition& c, int n_max);

treesim::LeafTally run_engine(Engine e, const Condition& c, int n_max,
                              const treesim::Options& opts = {});

}  // namespace woc::conditions
