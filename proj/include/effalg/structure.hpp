#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effalg/algebra.hpp"
#include "effalg/compat.hpp"

namespace effalg {

/// Configuration produced by the Shifting lemma: y <= u, z <= v, a /\ b = 0,
/// a, b maximal lower bounds of {y, z}, y, z minimal upper bounds of {a, b}.
struct MinimaxStructure {
  ElementId u, v, y, z, a, b;
  ElementId shift;  // the maximal lower bound c of {a1, b1} that was removed
  friend bool operator==(const MinimaxStructure&, const MinimaxStructure&) = default;
};

struct HyperDecomposition {
  ElementId target;
  OrthoFamily parts;
};

ElementSet maximal_lower_bounds(const EffectAlgebra& e, ElementId u, ElementId v);
ElementSet minimal_upper_bounds(const EffectAlgebra& e, ElementId u, ElementId v);

/// Every pair has a maximal lower bound, and every lower bound lies below one.
bool has_maximality_property(const EffectAlgebra& e);

/// Violation of (W+): orthogonal set A, upper bounds u, v of A^(+) with no
/// upper bound of A^(+) below both.
struct WPlusWitness {
  ElementSet a;
  ElementId u, v;
};

struct WPlusReport {
  bool holds = true;
  bool exhaustive = true;
  long long sets_checked = 0;
  std::vector<WPlusWitness> witnesses;
};

enum class WPlusMode { Auto, Exhaustive, Sampling };

/// Auto is exhaustive up to 20 elements and samples beyond that.
WPlusReport check_condition_wplus(const EffectAlgebra& e, Budget& budget, WPlusMode mode = WPlusMode::Auto,
                                  bool all_witnesses = false, int samples = 2000, unsigned seed = 1);
bool has_condition_wplus(const EffectAlgebra& e);

/// Checks the invariants of a minimax structure; returns a description of
/// the first failure or nullopt.
std::optional<std::string> minimax_defect(const EffectAlgebra& e, const MinimaxStructure& m);

/// Throws PreconditionViolated or NoStructureFound.
MinimaxStructure shifting(const EffectAlgebra& e, ElementId u, ElementId v, ElementId a1, ElementId b1);

/// Greedy hypermeager decomposition of a meager element. Throws
/// PreconditionViolated (not meager, or (W+) fails) and Stuck.
HyperDecomposition hypermeager_decomposition(const EffectAlgebra& e, ElementId y, Budget& budget);
HyperDecomposition hypermeager_decomposition(const EffectAlgebra& e, ElementId y);

enum class CheckOutcome { Holds, Violated, Vacuous };
const char* to_string(CheckOutcome o);

struct TheoremCheck {
  std::string id;           // "a".."g"
  std::string statement;
  CheckOutcome outcome = CheckOutcome::Vacuous;
  std::string note;         // why vacuous, or summary
  std::vector<std::string> witnesses;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool any_violated() const;
};

TheoremReport theorem_suite(const EffectAlgebra& e, Budget& budget, bool all_witnesses = false);
TheoremReport theorem_suite(const EffectAlgebra& e);

}  // namespace effalg
