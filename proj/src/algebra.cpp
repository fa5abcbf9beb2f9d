#include "effalg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace effalg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::DuplicateContradiction: return "DuplicateContradiction";
    case ErrorKind::ZeroEqualsOne: return "ZeroEqualsOne";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::ZeroHasNoOrder: return "ZeroHasNoOrder";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotSharplyDominating: return "NotSharplyDominating";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::NotMeager: return "NotMeager";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotInBlock: return "NotInBlock";
    case ErrorKind::NoRefinementFound: return "NoRefinementFound";
    case ErrorKind::NoStructureFound: return "NoStructureFound";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
  }
  return "Error";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Ei: return "Ei";
    case Axiom::Eii: return "Eii";
    case Axiom::Eiii: return "Eiii";
    case Axiom::Eiv: return "Eiv";
    case Axiom::Cancellation: return "Eii-derived cancellation";
  }
  return "?";
}

AxiomViolation::AxiomViolation(AxiomFailure failure)
    : Error(ErrorKind::AxiomViolation,
            std::string("AxiomViolation(") + to_string(failure.axiom) + "): " + failure.detail),
      failure_(std::move(failure)) {}

SyntaxError::SyntaxError(ErrorKind kind, int line, int column, const std::string& message)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// SumTable

SumTable::SumTable(std::vector<std::string> names, ElementId zero, ElementId unit)
    : names_(std::move(names)), zero_(zero), unit_(unit) {
  if (static_cast<int>(names_.size()) > kMaxElements)
    throw Error(ErrorKind::CapExceeded, "algebra has " + std::to_string(names_.size()) +
                                            " elements; the cap is " + std::to_string(kMaxElements));
  check(zero);
  check(unit);
  sums_.assign(names_.size() * names_.size(), -1);
}

void SumTable::check(ElementId x) const {
  if (x < 0 || x >= size()) throw Error(ErrorKind::UnknownElement, "element id " + std::to_string(x) + " out of range");
}

void SumTable::add_directed(ElementId x, ElementId y, ElementId z) {
  check(x);
  check(y);
  check(z);
  auto& slot = sums_[index(x, y)];
  if (slot >= 0 && slot != z)
    throw Error(ErrorKind::DuplicateContradiction,
                "DuplicateContradiction: " + names_[static_cast<std::size_t>(x)] + " + " +
                    names_[static_cast<std::size_t>(y)] + " stored as both " +
                    names_[static_cast<std::size_t>(slot)] + " and " + names_[static_cast<std::size_t>(z)]);
  slot = static_cast<signed char>(z);
}

void SumTable::add(ElementId x, ElementId y, ElementId z) {
  add_directed(x, y, z);
  add_directed(y, x, z);
}

std::optional<ElementId> SumTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<ElementId>(i);
  return std::nullopt;
}

namespace {

// Table with identity sums inserted; throws on a contradicting identity row.
SumTable normalized(const SumTable& table) {
  if (table.zero() == table.unit()) throw Error(ErrorKind::ZeroEqualsOne, "ZeroEqualsOne: zero and unit coincide");
  SumTable t = table;
  for (ElementId x = 0; x < t.size(); ++x) {
    t.add_directed(x, t.zero(), x);
    t.add_directed(t.zero(), x, x);
  }
  return t;
}

std::string tuple_text(const SumTable& t, std::initializer_list<ElementId> xs) {
  std::string s = "(";
  bool first = true;
  for (ElementId x : xs) {
    if (!first) s += ", ";
    s += t.names()[static_cast<std::size_t>(x)];
    first = false;
  }
  return s + ")";
}

std::string opt_name(const SumTable& t, std::optional<ElementId> x) {
  return x ? t.names()[static_cast<std::size_t>(*x)] : std::string("undefined");
}

}  // namespace

std::vector<AxiomFailure> find_axiom_failures(const SumTable& raw, bool first_only) {
  const SumTable t = normalized(raw);
  const int n = t.size();
  const ElementId one = t.unit();
  std::vector<AxiomFailure> out;
  auto report = [&](Axiom a, std::vector<ElementId> w, std::string detail) {
    out.push_back({a, std::move(w), std::move(detail)});
    return first_only;
  };

  // Checked in the order Ei, Eiv, Eiii, Eii, cancellation so that the most
  // local defect is reported first.
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const auto xy = t.sum(x, y);
      const auto yx = t.sum(y, x);
      if (xy && xy != yx && report(Axiom::Ei, {x, y}, tuple_text(t, {x, y}) + ": x+y = " + opt_name(t, xy) + " but y+x = " + opt_name(t, yx)))
        return out;
    }
  for (ElementId x = 0; x < n; ++x) {
    if (x == t.zero()) continue;
    if (t.sum(one, x) && report(Axiom::Eiv, {one, x}, "1 + " + t.names()[static_cast<std::size_t>(x)] + " is defined"))
      return out;
  }
  for (ElementId x = 0; x < n; ++x) {
    std::vector<ElementId> partners;
    for (ElementId y = 0; y < n; ++y)
      if (t.sum(x, y) == one) partners.push_back(y);
    if (partners.size() != 1) {
      std::vector<ElementId> w{x};
      w.insert(w.end(), partners.begin(), partners.end());
      if (report(Axiom::Eiii, w, t.names()[static_cast<std::size_t>(x)] + " has " + std::to_string(partners.size()) + " complements"))
        return out;
    }
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        const auto xy = t.sum(x, y);
        const auto lhs = xy ? t.sum(*xy, z) : std::nullopt;
        const auto yz = t.sum(y, z);
        const auto rhs = yz ? t.sum(x, *yz) : std::nullopt;
        if (lhs != rhs && report(Axiom::Eii, {x, y, z}, tuple_text(t, {x, y, z}) + ": (x+y)+z = " + opt_name(t, lhs) + " but x+(y+z) = " + opt_name(t, rhs)))
          return out;
      }
  for (ElementId z = 0; z < n; ++z)
    for (ElementId x = 0; x < n; ++x) {
      const auto xz = t.sum(x, z);
      if (!xz) continue;
      for (ElementId y = x + 1; y < n; ++y)
        if (t.sum(y, z) == xz && report(Axiom::Cancellation, {x, y, z}, tuple_text(t, {x, y, z}) + ": x+z = y+z = " + opt_name(t, xz) + " with x != y"))
          return out;
    }
  return out;
}

// ---------------------------------------------------------------------------
// OrthoFamily

OrthoFamily OrthoFamily::from_list(int n, std::span<const ElementId> entries) {
  OrthoFamily f(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (ElementId x : entries) f.add(x);
  return f;
}

void OrthoFamily::add(ElementId x, int times) {
  if (x >= static_cast<int>(counts_.size())) counts_.resize(static_cast<std::size_t>(x) + 1, 0);
  counts_[static_cast<std::size_t>(x)] += times;
}

int OrthoFamily::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::vector<ElementId> OrthoFamily::entries() const {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < counts_.size(); ++x)
    for (int k = 0; k < counts_[x]; ++k) out.push_back(static_cast<ElementId>(x));
  return out;
}

// ---------------------------------------------------------------------------
// EffectAlgebra

EffectAlgebra EffectAlgebra::validate(const SumTable& raw) {
  const auto failures = find_axiom_failures(raw, true);
  if (!failures.empty()) throw AxiomViolation(failures.front());
  const SumTable t = normalized(raw);

  EffectAlgebra e;
  e.n_ = t.size();
  e.zero_ = t.zero();
  e.unit_ = t.unit();
  e.names_ = t.names();
  const auto n = static_cast<std::size_t>(e.n_);
  e.sums_.assign(n * n, -1);
  e.diff_.assign(n * n, -1);
  e.complement_.assign(n, 0);
  e.down_.assign(n, {});
  e.up_.assign(n, {});
  for (ElementId x = 0; x < e.n_; ++x)
    for (ElementId z = 0; z < e.n_; ++z) {
      const auto y = t.sum(x, z);
      if (!y) continue;
      e.sums_[e.idx(x, z)] = static_cast<signed char>(*y);
      e.diff_[e.idx(*y, x)] = static_cast<signed char>(z);
      e.down_[static_cast<std::size_t>(*y)].insert(x);
      e.up_[static_cast<std::size_t>(x)].insert(*y);
      if (*y == e.unit_) e.complement_[static_cast<std::size_t>(x)] = z;
    }
  return e;
}

const std::string& EffectAlgebra::name(ElementId x) const {
  check(x);
  return names_[static_cast<std::size_t>(x)];
}

void EffectAlgebra::check(ElementId x) const {
  if (x < 0 || x >= n_) throw Error(ErrorKind::UnknownElement, "UnknownElement: id " + std::to_string(x));
}

std::optional<ElementId> EffectAlgebra::find(std::string_view nm) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == nm) return static_cast<ElementId>(i);
  return std::nullopt;
}

ElementId EffectAlgebra::id(std::string_view nm) const {
  if (auto x = find(nm)) return *x;
  throw Error(ErrorKind::UnknownElement, "UnknownElement: " + std::string(nm));
}

ElementId EffectAlgebra::ominus(ElementId y, ElementId x) const {
  check(x);
  check(y);
  if (auto d = try_ominus(y, x)) return *d;
  throw Error(ErrorKind::NotBelow, "NotBelow: " + name(x) + " is not below " + name(y));
}

int EffectAlgebra::ord(ElementId x) const {
  check(x);
  if (x == zero_) throw Error(ErrorKind::ZeroHasNoOrder, "ZeroHasNoOrder");
  int k = 1;
  ElementId cur = x;
  // Multiples of a nonzero element strictly increase, so n bounds the loop.
  while (k <= n_) {
    const auto next = sum(cur, x);
    if (!next) return k;
    cur = *next;
    ++k;
  }
  return k;
}

std::optional<ElementId> EffectAlgebra::multiple(ElementId x, int k) const {
  check(x);
  ElementId cur = zero_;
  for (int i = 0; i < k; ++i) {
    const auto next = sum(cur, x);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

ElementSet EffectAlgebra::lower_bounds(ElementSet s) const {
  ElementSet out = elements();
  for (ElementId x : s) out &= down(x);
  return out;
}

ElementSet EffectAlgebra::upper_bounds(ElementSet s) const {
  ElementSet out = elements();
  for (ElementId x : s) out &= up(x);
  return out;
}

ElementSet EffectAlgebra::maximal(ElementSet s) const {
  ElementSet out;
  for (ElementId x : s)
    if ((up(x) & s) == ElementSet::single(x)) out.insert(x);
  return out;
}

ElementSet EffectAlgebra::minimal(ElementSet s) const {
  ElementSet out;
  for (ElementId x : s)
    if ((down(x) & s) == ElementSet::single(x)) out.insert(x);
  return out;
}

std::optional<ElementId> EffectAlgebra::glb(ElementSet s) const {
  if (s.empty()) throw Error(ErrorKind::PreconditionViolated, "glb of an empty set");
  for (ElementId x : s) check(x);
  const ElementSet lb = lower_bounds(s);
  for (ElementId g : lb)
    if (lb.subset_of(down(g))) return g;
  return std::nullopt;
}

std::optional<ElementId> EffectAlgebra::lub(ElementSet s) const {
  if (s.empty()) throw Error(ErrorKind::PreconditionViolated, "lub of an empty set");
  for (ElementId x : s) check(x);
  const ElementSet ub = upper_bounds(s);
  for (ElementId g : ub)
    if (ub.subset_of(up(g))) return g;
  return std::nullopt;
}

ElementSet EffectAlgebra::atoms() const {
  const ElementSet nonzero = elements() - ElementSet::single(zero_);
  return minimal(nonzero);
}

bool EffectAlgebra::is_atomic() const {
  const ElementSet a = atoms();
  for (ElementId x : elements())
    if (x != zero_ && !down(x).intersects(a)) return false;
  return true;
}

bool EffectAlgebra::is_archimedean() const {
  for (ElementId x : elements())
    if (x != zero_ && ord(x) > n_) return false;
  return true;
}

bool EffectAlgebra::is_orthoalgebra() const {
  for (ElementId x : elements())
    if (x != zero_ && orthogonal(x, x)) return false;
  return true;
}

bool EffectAlgebra::is_lattice() const {
  for (ElementId x = 0; x < n_; ++x)
    for (ElementId y = x + 1; y < n_; ++y)
      if (!meet(x, y) || !join(x, y)) return false;
  return true;
}

SumTable EffectAlgebra::table() const {
  SumTable t(names_, zero_, unit_);
  for (ElementId x = 0; x < n_; ++x)
    for (ElementId y = 0; y < n_; ++y)
      if (auto z = sum(x, y)) t.add_directed(x, y, *z);
  return t;
}

// ---------------------------------------------------------------------------
// Orthogonal families

std::optional<ElementId> orthosum_in_order(const EffectAlgebra& e, std::span<const ElementId> order) {
  ElementId acc = e.zero();
  for (ElementId x : order) {
    e.check(x);
    const auto next = e.sum(acc, x);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

void check_orthogonal(const EffectAlgebra& e, const OrthoFamily& family) {
  ElementId acc = e.zero();
  std::vector<ElementId> prefix;
  for (ElementId x : family.entries()) {
    e.check(x);
    prefix.push_back(x);
    const auto next = e.sum(acc, x);
    if (!next) {
      std::string w;
      for (ElementId p : prefix) w += (w.empty() ? "" : ", ") + e.name(p);
      throw Error(ErrorKind::NotOrthogonal, "NotOrthogonal: sub-multiset {" + w + "} has no sum");
    }
    acc = *next;
  }
}

ElementId orthosum(const EffectAlgebra& e, const OrthoFamily& family) {
  check_orthogonal(e, family);
  return *orthosum_in_order(e, family.entries());
}

namespace {

ElementSet extend_partial_sums(const EffectAlgebra& e, ElementSet reach, ElementId x) {
  ElementSet out = reach;
  for (ElementId r : reach)
    if (auto s = e.sum(r, x)) out.insert(*s);
  return out;
}

}  // namespace

ElementSet partial_sums(const EffectAlgebra& e, const OrthoFamily& family) {
  check_orthogonal(e, family);
  ElementSet reach = ElementSet::single(e.zero());
  for (ElementId x : family.entries()) reach = extend_partial_sums(e, reach, x);
  return reach;
}

OrthocompletenessReport check_orthocomplete(const EffectAlgebra& e, Budget& budget) {
  OrthocompletenessReport rep;
  std::vector<ElementId> stack;

  auto visit = [&](auto&& self, ElementId from, ElementId total, ElementSet reach) -> bool {
    budget.charge("orthocompleteness");
    ++rep.families_checked;
    // For a finite family the orthosum is the supremum of its partial sums.
    if (e.lub(reach) != total) {
      rep.orthocomplete = false;
      rep.witness = OrthoFamily::from_list(e.size(), stack);
      return false;
    }
    for (ElementId x = from; x < e.size(); ++x) {
      if (x == e.zero()) continue;
      const auto next = e.sum(total, x);
      if (!next) continue;
      stack.push_back(x);
      const bool ok = self(self, x, *next, extend_partial_sums(e, reach, x));
      stack.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  visit(visit, 0, e.zero(), ElementSet::single(e.zero()));
  return rep;
}

bool is_orthocomplete(const EffectAlgebra& e) {
  Budget budget;
  return check_orthocomplete(e, budget).orthocomplete;
}

// ---------------------------------------------------------------------------

SubAlgebra restrict_to(const EffectAlgebra& e, ElementSet members) {
  if (!members.contains(e.zero()) || !members.contains(e.unit()))
    throw Error(ErrorKind::PreconditionViolated, "restriction must contain 0 and 1");
  std::vector<ElementId> embed = members.to_vector();
  std::vector<int> back(static_cast<std::size_t>(e.size()), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < embed.size(); ++i) {
    back[static_cast<std::size_t>(embed[i])] = static_cast<int>(i);
    names.push_back(e.name(embed[i]));
  }
  SumTable t(names, back[static_cast<std::size_t>(e.zero())], back[static_cast<std::size_t>(e.unit())]);
  for (ElementId x : members)
    for (ElementId y : members)
      if (auto z = e.sum(x, y); z && members.contains(*z))
        t.add_directed(back[static_cast<std::size_t>(x)], back[static_cast<std::size_t>(y)], back[static_cast<std::size_t>(*z)]);
  return {EffectAlgebra::validate(t), std::move(embed)};
}

std::string format_set(const EffectAlgebra& e, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s) {
    if (!first) out += ", ";
    out += e.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace effalg
