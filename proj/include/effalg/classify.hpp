#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effalg/algebra.hpp"

namespace effalg {

/// Per-element classification record.
struct ElementProfile {
  ElementId element = 0;
  bool sharp = false;
  bool principal = false;
  bool central = false;
  bool meager = false;
  bool hypermeager = false;
  bool ultrameager = false;
  std::optional<int> ord;  // empty for zero
  std::optional<ElementId> tilde;
  std::optional<ElementId> hat;
};

bool is_sharp(const EffectAlgebra& e, ElementId x);
ElementSet sharp_set(const EffectAlgebra& e);
bool is_principal(const EffectAlgebra& e, ElementId x);
bool is_central(const EffectAlgebra& e, ElementId x);
ElementSet center(const EffectAlgebra& e);

/// Center together with the structural facts that are checked about it.
struct CenterReport {
  ElementSet members;
  bool sub_effect_algebra = false;
  bool boolean_algebra = false;
};
CenterReport check_center(const EffectAlgebra& e);

/// A triple x (+) y = z with two of its members in Q and one outside.
struct SubalgebraWitness {
  ElementId x, y, z;
  friend bool operator==(const SubalgebraWitness&, const SubalgebraWitness&) = default;
};
/// Returns nullopt when Q is a sub-effect algebra. If 1 is missing the
/// witness is (1, 0, 1). Sum-closure failures are reported before
/// difference-closure failures.
std::optional<SubalgebraWitness> sub_effect_algebra_violation(const EffectAlgebra& e, ElementSet q);
bool is_sub_effect_algebra(const EffectAlgebra& e, ElementSet q);

ElementSet mea_set(const EffectAlgebra& e);
ElementSet hmea_set(const EffectAlgebra& e);
/// Elements with x (+) x defined; must equal hmea_set.
ElementSet self_orthogonal_set(const EffectAlgebra& e);
ElementSet umea_set(const EffectAlgebra& e);

/// tilde(x) = greatest sharp element below x, hat(x) = least sharp above.
struct DominatingData {
  std::vector<ElementId> tilde;
  std::vector<ElementId> hat;
};

/// Failure of sharp domination: the element and the minimal sharp upper
/// bounds (or maximal sharp lower bounds) that have no extremum.
struct DominationFailure {
  ElementId element = 0;
  bool missing_hat = true;
  ElementSet antichain;
};

struct DominationResult {
  std::optional<DominatingData> data;
  std::optional<DominationFailure> failure;
};

DominationResult check_sharply_dominating(const EffectAlgebra& e);
std::optional<DominatingData> sharply_dominating(const EffectAlgebra& e);

struct SharpMeagerSplit {
  ElementId sharp;
  ElementId meager;
  /// Number of (s, m) in Sh x Mea with s (+) m = x found by exhaustive scan.
  int decompositions_found = 0;
};
/// x = tilde(x) (+) (x (-) tilde(x)); uniqueness is verified by scanning all
/// sharp/meager pairs. Throws NotSharplyDominating if `dom` is empty.
SharpMeagerSplit decompose_sharp_meager(const EffectAlgebra& e, const std::optional<DominatingData>& dom, ElementId x);

struct IdentityViolation {
  ElementId element;
  std::string identity;
};
/// hat(x (-) tilde x) = hat(hat x (-) x) = hat x (-) tilde x and
/// hat x (-) x = x' (-) (hat x)' = x' (-) tilde(x'), plus the dual for x (-) tilde x.
std::vector<IdentityViolation> check_hat_identities(const EffectAlgebra& e, const std::optional<DominatingData>& dom);

struct AtomicDecomposition {
  ElementSet atoms_below;                        // A_x
  std::vector<std::pair<ElementId, int>> multipliers;  // (a, k_a) ascending by a
  OrthoFamily parts;                             // F_x as multiples k_a * a
  int decompositions_found = 0;                  // exhaustive uniqueness scan
  std::optional<bool> hat_formula_holds;         // set when hat(x) exists
};
/// Throws NotLattice, NotAtomic, NotMeager.
AtomicDecomposition meager_atomic_decomposition(const EffectAlgebra& e, ElementId x);

struct SharpnessCriterionViolation {
  ElementId v;
  bool sharp;
  bool criterion;
};
/// For homogeneous E: v sharp iff every y <= w, y <= w' is below z whenever
/// v = w (+) z. Throws NotHomogeneous.
std::vector<SharpnessCriterionViolation> check_sharpness_criterion(const EffectAlgebra& e);

ElementProfile profile(const EffectAlgebra& e, ElementId x, const std::optional<DominatingData>& dom);
std::vector<ElementProfile> profiles(const EffectAlgebra& e);

// Checks of further lemmas on concrete instances. Each returns the list of
// violating tuples (empty when the statement holds).

/// c /\ (x (+) y) = (c /\ x) (+) (c /\ y) for central c.
std::vector<std::vector<ElementId>> check_central_distributivity(const EffectAlgebra& e);
/// Homogeneous E: y <= w sharp and k*y defined imply k*y <= w.
std::vector<std::vector<ElementId>> check_sharp_multiples(const EffectAlgebra& e);
/// Homogeneous E: a != 0 with a /\ (n_a a)' = 0 has hat(a) = n_a a.
std::vector<std::vector<ElementId>> check_atom_hat(const EffectAlgebra& e);
/// Sharply dominating E: y ultrameager iff y <= hat(y) (-) y.
std::vector<ElementId> check_ultrameager_criterion(const EffectAlgebra& e, const DominatingData& dom);

}  // namespace effalg
