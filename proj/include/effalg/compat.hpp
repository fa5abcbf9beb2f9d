#pragma once

#include <optional>
#include <vector>

#include "effalg/algebra.hpp"
#include "effalg/classify.hpp"

namespace effalg {

/// x = p (+) q, y = q (+) r, p (+) q (+) r defined.
struct CompatWitness {
  ElementId p, q, r;
  friend bool operator==(const CompatWitness&, const CompatWitness&) = default;
};

/// Least witness by q; nullopt when x and y are not compatible.
std::optional<CompatWitness> comp(const EffectAlgebra& e, ElementId x, ElementId y);

/// Exact decision of internal compatibility: does an orthogonal family drawn
/// from M have every member of M among its partial sums? Memoized search over
/// (next candidate, running sum, reachable sums). Throws BudgetExceeded.
bool is_internally_compatible(const EffectAlgebra& e, ElementSet m, Budget& budget);
bool is_internally_compatible(const EffectAlgebra& e, ElementSet m);
/// The family found by the search, ascending ids; nullopt if none exists.
std::optional<OrthoFamily> internal_compatibility_witness(const EffectAlgebra& e, ElementSet m, Budget& budget);

bool has_rdp(const EffectAlgebra& e);
bool is_homogeneous(const EffectAlgebra& e);
bool has_dmp(const EffectAlgebra& e);

/// u = u_1 (+) ... (+) u_n with u_i <= v_i; lexicographically least by id.
/// Throws PreconditionViolated or NoRefinementFound.
std::vector<ElementId> homogeneous_refine(const EffectAlgebra& e, ElementId u, const std::vector<ElementId>& vs);

struct Block {
  ElementSet members;
  friend bool operator==(const Block&, const Block&) = default;
};

/// All blocks of a homogeneous algebra, sorted by size descending, then by
/// ascending member list. Throws NotHomogeneous, BudgetExceeded.
std::vector<Block> blocks(const EffectAlgebra& e, Budget& budget);
std::vector<Block> blocks(const EffectAlgebra& e);

/// Throws NotInBlock when S is not inside the block, PreconditionViolated on
/// an empty S.
std::optional<ElementId> block_glb(const EffectAlgebra& e, const Block& b, ElementSet s);
std::optional<ElementId> block_lub(const EffectAlgebra& e, const Block& b, ElementSet s);
bool block_meet_is_zero(const EffectAlgebra& e, const Block& b, ElementId x, ElementId y);
bool block_is_lattice(const EffectAlgebra& e, const Block& b);

struct BlockVerdict {
  Block block;
  bool lattice = false;
  bool rdp = false;
  bool sub_effect_algebra = false;
};

struct MvCoverReport {
  std::vector<BlockVerdict> blocks;
  bool union_is_whole = false;
  bool covered = false;  // every block an MV-effect algebra and union = E
};
/// Throws NotHomogeneous.
MvCoverReport mv_cover_check(const EffectAlgebra& e, Budget& budget);
MvCoverReport mv_cover_check(const EffectAlgebra& e);

struct SoberReport {
  bool sober = false;
  bool conditions[4] = {false, false, false, false};
  bool consistent = false;  // all four conditions agree
};
/// Throws PreconditionViolated unless E is homogeneous and `dom` present.
SoberReport check_sober(const EffectAlgebra& e, const std::optional<DominatingData>& dom, Budget& budget);
bool is_sober(const EffectAlgebra& e, const std::optional<DominatingData>& dom);

struct JoinDisagreement {
  ElementId x, y;
  Block a, b;
  std::optional<ElementId> join_a, join_b;
};
/// Scans block pairs for differing block-local joins. Throws
/// PreconditionViolated unless E is homogeneous with lattice blocks.
std::vector<JoinDisagreement> join_agreement_scan(const EffectAlgebra& e, bool all, Budget& budget);
std::optional<JoinDisagreement> join_agreement_scan(const EffectAlgebra& e);

}  // namespace effalg
