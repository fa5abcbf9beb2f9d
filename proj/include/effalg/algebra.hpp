#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effalg/element_set.hpp"
#include "effalg/errors.hpp"

namespace effalg {

/// Raw partial orthosum table over named elements, prior to validation.
///
/// Sums are stored per ordered pair. `add` records both orders, which is how
/// every file-based table is built; `add_directed` exists so that tables with
/// a broken commutativity axiom can still be represented and rejected.
class SumTable {
 public:
  SumTable(std::vector<std::string> names, ElementId zero, ElementId unit);

  /// Records x (+) y = z in both orders. Throws DuplicateContradiction when a
  /// different result is already stored for the pair.
  void add(ElementId x, ElementId y, ElementId z);
  void add_directed(ElementId x, ElementId y, ElementId z);

  int size() const { return static_cast<int>(names_.size()); }
  ElementId zero() const { return zero_; }
  ElementId unit() const { return unit_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;

  std::optional<ElementId> sum(ElementId x, ElementId y) const {
    const int s = sums_[index(x, y)];
    return s < 0 ? std::nullopt : std::optional<ElementId>(s);
  }

 private:
  std::size_t index(ElementId x, ElementId y) const {
    return static_cast<std::size_t>(x) * names_.size() + static_cast<std::size_t>(y);
  }
  void check(ElementId x) const;

  std::vector<std::string> names_;
  ElementId zero_;
  ElementId unit_;
  std::vector<signed char> sums_;
};

/// Collects axiom failures of a table (after inserting x (+) 0 = x).
/// With `first_only` the scan stops at the first failure.
std::vector<AxiomFailure> find_axiom_failures(const SumTable& table, bool first_only);

/// Finite multiset of elements; multiplicities indexed by ElementId.
class OrthoFamily {
 public:
  OrthoFamily() = default;
  explicit OrthoFamily(std::vector<int> counts) : counts_(std::move(counts)) {}

  static OrthoFamily from_list(int n, std::span<const ElementId> entries);

  int count(ElementId x) const {
    return x < static_cast<int>(counts_.size()) ? counts_[static_cast<std::size_t>(x)] : 0;
  }
  void add(ElementId x, int times = 1);
  int total() const;
  bool empty() const { return total() == 0; }
  /// Entries expanded with repetition, ascending by id.
  std::vector<ElementId> entries() const;
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const OrthoFamily&, const OrthoFamily&) = default;

 private:
  std::vector<int> counts_;
};

/// A validated finite effect algebra. Immutable; all queries are const.
class EffectAlgebra {
 public:
  /// Validates (Ei)-(Eiv) and cancellation, then derives complement, order
  /// and difference. Throws AxiomViolation, ZeroEqualsOne or CapExceeded.
  static EffectAlgebra validate(const SumTable& table);

  int size() const { return n_; }
  ElementId zero() const { return zero_; }
  ElementId unit() const { return unit_; }
  ElementSet elements() const { return ElementSet::all(n_); }
  const std::string& name(ElementId x) const;
  const std::vector<std::string>& names() const { return names_; }
  /// Throws UnknownElement.
  ElementId id(std::string_view name) const;
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws UnknownElement when x is out of range.
  void check(ElementId x) const;

  std::optional<ElementId> sum(ElementId x, ElementId y) const {
    const int s = sums_[idx(x, y)];
    return s < 0 ? std::nullopt : std::optional<ElementId>(s);
  }
  bool orthogonal(ElementId x, ElementId y) const { return sums_[idx(x, y)] >= 0; }
  ElementId complement(ElementId x) const { return complement_[static_cast<std::size_t>(x)]; }

  bool leq(ElementId x, ElementId y) const { return down_[static_cast<std::size_t>(y)].contains(x); }
  /// y (-) x; throws NotBelow unless x <= y.
  ElementId ominus(ElementId y, ElementId x) const;
  std::optional<ElementId> try_ominus(ElementId y, ElementId x) const {
    const int d = diff_[idx(y, x)];
    return d < 0 ? std::nullopt : std::optional<ElementId>(d);
  }

  ElementSet down(ElementId x) const { return down_[static_cast<std::size_t>(x)]; }
  ElementSet up(ElementId x) const { return up_[static_cast<std::size_t>(x)]; }

  /// Largest n with n*x defined. Throws ZeroHasNoOrder for x = 0.
  int ord(ElementId x) const;
  /// k*x when defined (0*x = 0).
  std::optional<ElementId> multiple(ElementId x, int k) const;

  ElementSet lower_bounds(ElementSet s) const;
  ElementSet upper_bounds(ElementSet s) const;
  ElementSet maximal(ElementSet s) const;
  ElementSet minimal(ElementSet s) const;
  /// Greatest lower bound in the induced order; nullopt when none exists.
  /// Throws PreconditionViolated for an empty set.
  std::optional<ElementId> glb(ElementSet s) const;
  std::optional<ElementId> lub(ElementSet s) const;
  std::optional<ElementId> meet(ElementId x, ElementId y) const { return glb(ElementSet::of({x, y})); }
  std::optional<ElementId> join(ElementId x, ElementId y) const { return lub(ElementSet::of({x, y})); }
  /// True when 0 is the only common lower bound of x and y.
  bool meet_is_zero(ElementId x, ElementId y) const {
    return (down(x) & down(y)) == ElementSet::single(zero_);
  }

  ElementSet atoms() const;
  bool is_atomic() const;
  bool is_archimedean() const;
  bool is_orthoalgebra() const;
  bool is_lattice() const;

  /// The table this algebra was validated from, including identity sums.
  SumTable table() const;

 private:
  EffectAlgebra() = default;
  std::size_t idx(ElementId x, ElementId y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }

  int n_ = 0;
  ElementId zero_ = 0;
  ElementId unit_ = 0;
  std::vector<std::string> names_;
  std::vector<signed char> sums_;
  std::vector<signed char> diff_;
  std::vector<ElementId> complement_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
};

/// Validates a family: multiplicities of nonzero elements within ord, and the
/// iterated sum defined. Throws NotOrthogonal with the offending prefix.
void check_orthogonal(const EffectAlgebra& e, const OrthoFamily& family);

/// Iterated orthosum in ascending-id order; throws NotOrthogonal.
ElementId orthosum(const EffectAlgebra& e, const OrthoFamily& family);
/// Iterated orthosum in the given order, nullopt if some prefix is undefined.
std::optional<ElementId> orthosum_in_order(const EffectAlgebra& e, std::span<const ElementId> order);

/// G^(+): the sums of all finite sub-multisets of an orthogonal family.
ElementSet partial_sums(const EffectAlgebra& e, const OrthoFamily& family);

struct OrthocompletenessReport {
  bool orthocomplete = true;
  long long families_checked = 0;
  std::optional<OrthoFamily> witness;  // a non-orthosummable family
};

/// Enumerates every orthogonal multiset of nonzero elements (zero adds
/// nothing to G^(+)) and checks that the supremum of G^(+) exists.
OrthocompletenessReport check_orthocomplete(const EffectAlgebra& e, Budget& budget);
bool is_orthocomplete(const EffectAlgebra& e);

/// Sub-effect algebra on `members` with the restricted orthosum; ids are
/// renumbered ascending, `embedding[i]` is the id in `e` of new element i.
struct SubAlgebra {
  EffectAlgebra algebra;
  std::vector<ElementId> embedding;
};
SubAlgebra restrict_to(const EffectAlgebra& e, ElementSet members);

/// Renders a set as "{a, b, c}" using element names.
std::string format_set(const EffectAlgebra& e, ElementSet s);

}  // namespace effalg
