#include "effalg/classify.hpp"

#include "effalg/compat.hpp"

namespace effalg {

namespace {

std::optional<ElementId> least_of(const EffectAlgebra& e, ElementSet s) {
  const ElementSet m = e.minimal(s);
  if (m.size() == 1) return m.first();
  return std::nullopt;
}

std::optional<ElementId> greatest_of(const EffectAlgebra& e, ElementSet s) {
  const ElementSet m = e.maximal(s);
  if (m.size() == 1) return m.first();
  return std::nullopt;
}

std::optional<ElementId> hat_of(const EffectAlgebra& e, ElementSet sharp, ElementId x) {
  return least_of(e, e.up(x) & sharp);
}

std::optional<ElementId> tilde_of(const EffectAlgebra& e, ElementSet sharp, ElementId x) {
  return greatest_of(e, e.down(x) & sharp);
}

}  // namespace

bool is_sharp(const EffectAlgebra& e, ElementId x) {
  e.check(x);
  return e.meet_is_zero(x, e.complement(x));
}

ElementSet sharp_set(const EffectAlgebra& e) {
  ElementSet s;
  for (ElementId x : e.elements())
    if (is_sharp(e, x)) s.insert(x);
  return s;
}

bool is_principal(const EffectAlgebra& e, ElementId x) {
  e.check(x);
  const ElementSet below = e.down(x);
  for (ElementId y : below)
    for (ElementId z : below)
      if (auto s = e.sum(y, z); s && !e.leq(*s, x)) return false;
  return true;
}

bool is_central(const EffectAlgebra& e, ElementId x) {
  const ElementId xc = e.complement(x);
  if (!is_principal(e, x) || !is_principal(e, xc)) return false;
  for (ElementId y : e.elements()) {
    bool split = false;
    for (ElementId y1 : e.down(x) & e.down(y)) {
      if (e.leq(e.ominus(y, y1), xc)) {
        split = true;
        break;
      }
    }
    if (!split) return false;
  }
  return true;
}

ElementSet center(const EffectAlgebra& e) {
  ElementSet c;
  for (ElementId x : e.elements())
    if (is_central(e, x)) c.insert(x);
  return c;
}

CenterReport check_center(const EffectAlgebra& e) {
  CenterReport rep;
  rep.members = center(e);
  rep.sub_effect_algebra = is_sub_effect_algebra(e, rep.members);
  if (!rep.sub_effect_algebra) return rep;

  const auto sub = restrict_to(e, rep.members).algebra;
  bool boolean = sub.is_lattice();
  for (ElementId x = 0; boolean && x < sub.size(); ++x) {
    const ElementId xc = sub.complement(x);
    boolean = sub.meet(x, xc) == sub.zero() && sub.join(x, xc) == sub.unit();
    for (ElementId y = 0; boolean && y < sub.size(); ++y)
      for (ElementId z = 0; boolean && z < sub.size(); ++z) {
        const auto lhs = sub.meet(x, *sub.join(y, z));
        const auto rhs = sub.join(*sub.meet(x, y), *sub.meet(x, z));
        boolean = lhs == rhs;
      }
  }
  rep.boolean_algebra = boolean;
  return rep;
}

std::optional<SubalgebraWitness> sub_effect_algebra_violation(const EffectAlgebra& e, ElementSet q) {
  if (!q.contains(e.unit())) return SubalgebraWitness{e.unit(), e.zero(), e.unit()};
  for (ElementId x : q)
    for (ElementId y : q)
      if (auto z = e.sum(x, y); z && !q.contains(*z)) return SubalgebraWitness{x, y, *z};
  for (ElementId z : q)
    for (ElementId x : q)
      if (auto y = e.try_ominus(z, x); y && !q.contains(*y)) return SubalgebraWitness{x, *y, z};
  return std::nullopt;
}

bool is_sub_effect_algebra(const EffectAlgebra& e, ElementSet q) {
  return !sub_effect_algebra_violation(e, q).has_value();
}

ElementSet mea_set(const EffectAlgebra& e) {
  const ElementSet sharp = sharp_set(e);
  const ElementSet zero = ElementSet::single(e.zero());
  ElementSet out;
  for (ElementId x : e.elements())
    if ((e.down(x) & sharp) == zero) out.insert(x);
  return out;
}

ElementSet hmea_set(const EffectAlgebra& e) {
  ElementSet out;
  for (ElementId x : e.elements())
    for (ElementId y : e.up(x))
      if (e.leq(x, e.complement(y))) {
        out.insert(x);
        break;
      }
  return out;
}

ElementSet self_orthogonal_set(const EffectAlgebra& e) {
  ElementSet out;
  for (ElementId x : e.elements())
    if (e.orthogonal(x, x)) out.insert(x);
  return out;
}

ElementSet umea_set(const EffectAlgebra& e) {
  const ElementSet sharp = sharp_set(e);
  ElementSet out;
  for (ElementId x : e.elements()) {
    bool ok = true;
    for (ElementId y : e.up(x) & sharp)
      if (!e.leq(x, e.ominus(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

DominationResult check_sharply_dominating(const EffectAlgebra& e) {
  const ElementSet sharp = sharp_set(e);
  DominatingData d;
  for (ElementId x : e.elements()) {
    const auto h = hat_of(e, sharp, x);
    if (!h) return {std::nullopt, DominationFailure{x, true, e.minimal(e.up(x) & sharp)}};
    const auto t = tilde_of(e, sharp, x);
    if (!t) return {std::nullopt, DominationFailure{x, false, e.maximal(e.down(x) & sharp)}};
    d.hat.push_back(*h);
    d.tilde.push_back(*t);
  }
  return {std::move(d), std::nullopt};
}

std::optional<DominatingData> sharply_dominating(const EffectAlgebra& e) {
  return check_sharply_dominating(e).data;
}

namespace {

const DominatingData& require_dominating(const std::optional<DominatingData>& dom) {
  if (!dom) throw Error(ErrorKind::NotSharplyDominating, "NotSharplyDominating");
  return *dom;
}

}  // namespace

SharpMeagerSplit decompose_sharp_meager(const EffectAlgebra& e, const std::optional<DominatingData>& dom, ElementId x) {
  const auto& d = require_dominating(dom);
  e.check(x);
  SharpMeagerSplit out{};
  out.sharp = d.tilde[static_cast<std::size_t>(x)];
  out.meager = e.ominus(x, out.sharp);
  const ElementSet mea = mea_set(e);
  for (ElementId s : sharp_set(e))
    for (ElementId m : mea)
      if (e.sum(s, m) == x) ++out.decompositions_found;
  return out;
}

std::vector<IdentityViolation> check_hat_identities(const EffectAlgebra& e, const std::optional<DominatingData>& dom) {
  const auto& d = require_dominating(dom);
  std::vector<IdentityViolation> out;
  auto hat = [&](std::optional<ElementId> x) -> std::optional<ElementId> {
    if (!x) return std::nullopt;
    return d.hat[static_cast<std::size_t>(*x)];
  };
  auto tilde = [&](ElementId x) { return d.tilde[static_cast<std::size_t>(x)]; };
  for (ElementId x : e.elements()) {
    const ElementId t = tilde(x);
    const ElementId h = *hat(x);
    const ElementId xc = e.complement(x);

    const auto a = hat(e.try_ominus(x, t));
    const auto b = hat(e.try_ominus(h, x));
    const auto c = e.try_ominus(h, t);
    if (!a || a != b || b != c)
      out.push_back({x, "hat(x - tilde x) = hat(hat x - x) = hat x - tilde x"});

    const auto s1 = e.try_ominus(h, x);
    const auto s2 = e.try_ominus(xc, e.complement(h));
    const auto s3 = e.try_ominus(xc, tilde(xc));
    if (!s1 || s1 != s2 || s2 != s3)
      out.push_back({x, "hat x - x = x' - (hat x)' = x' - tilde(x')"});

    const auto m1 = e.try_ominus(x, t);
    const auto m2 = e.try_ominus(e.complement(t), xc);
    const auto m3 = e.try_ominus(*hat(xc), xc);
    if (!m1 || m1 != m2 || m2 != m3)
      out.push_back({x, "x - tilde x = (tilde x)' - x' = hat(x') - x'"});
  }
  return out;
}

AtomicDecomposition meager_atomic_decomposition(const EffectAlgebra& e, ElementId x) {
  e.check(x);
  if (!e.is_lattice()) throw Error(ErrorKind::NotLattice, "NotLattice: the algebra is not lattice ordered");
  if (!e.is_atomic()) throw Error(ErrorKind::NotAtomic, "NotAtomic");
  if (!mea_set(e).contains(x)) throw Error(ErrorKind::NotMeager, "NotMeager: " + e.name(x));

  AtomicDecomposition out;
  out.atoms_below = e.atoms() & e.down(x);
  out.parts = OrthoFamily(std::vector<int>(static_cast<std::size_t>(e.size()), 0));
  std::vector<ElementId> atoms = out.atoms_below.to_vector();
  for (ElementId a : atoms) {
    int k = 0;
    while (true) {
      const auto m = e.multiple(a, k + 1);
      if (!m || !e.leq(*m, x)) break;
      ++k;
    }
    out.multipliers.emplace_back(a, k);
    out.parts.add(*e.multiple(a, k));
  }

  // All choices l_a in [0, n_a) (0 meaning a is unused) whose multiples sum to x.
  std::vector<int> orders;
  for (ElementId a : atoms) orders.push_back(e.ord(a));
  auto scan = [&](auto&& self, std::size_t i, ElementId acc) -> void {
    if (i == atoms.size()) {
      if (acc == x) ++out.decompositions_found;
      return;
    }
    for (int l = 0; l < orders[i]; ++l) {
      const auto m = e.multiple(atoms[i], l);
      if (!m) break;
      if (auto next = e.sum(acc, *m)) self(self, i + 1, *next);
    }
  };
  scan(scan, 0, e.zero());

  const ElementSet sharp = sharp_set(e);
  if (auto h = hat_of(e, sharp, x)) {
    std::vector<ElementId> full, rest;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      full.push_back(*e.multiple(atoms[i], orders[i]));
      const auto r = e.multiple(atoms[i], orders[i] - out.multipliers[i].second);
      if (r) rest.push_back(*r);
    }
    const auto top = orthosum_in_order(e, full);
    const auto gap = orthosum_in_order(e, rest);
    const auto h_minus_x = e.try_ominus(*h, x);
    const auto hat_gap = h_minus_x ? hat_of(e, sharp, *h_minus_x) : std::nullopt;
    out.hat_formula_holds = top == h && hat_gap == h && gap == h_minus_x;
  }
  return out;
}

std::vector<SharpnessCriterionViolation> check_sharpness_criterion(const EffectAlgebra& e) {
  if (!is_homogeneous(e)) throw Error(ErrorKind::NotHomogeneous, "NotHomogeneous");
  std::vector<SharpnessCriterionViolation> out;
  for (ElementId v : e.elements()) {
    bool criterion = true;
    for (ElementId w : e.down(v)) {
      const ElementId z = e.ominus(v, w);
      for (ElementId y : e.down(w) & e.down(e.complement(w)))
        if (!e.leq(y, z)) criterion = false;
    }
    const bool sharp = is_sharp(e, v);
    if (sharp != criterion) out.push_back({v, sharp, criterion});
  }
  return out;
}

ElementProfile profile(const EffectAlgebra& e, ElementId x, const std::optional<DominatingData>& dom) {
  ElementProfile p;
  p.element = x;
  p.sharp = is_sharp(e, x);
  p.principal = is_principal(e, x);
  p.central = is_central(e, x);
  p.meager = mea_set(e).contains(x);
  p.hypermeager = hmea_set(e).contains(x);
  p.ultrameager = umea_set(e).contains(x);
  if (x != e.zero()) p.ord = e.ord(x);
  const ElementSet sharp = sharp_set(e);
  if (dom) {
    p.tilde = dom->tilde[static_cast<std::size_t>(x)];
    p.hat = dom->hat[static_cast<std::size_t>(x)];
  } else {
    p.tilde = tilde_of(e, sharp, x);
    p.hat = hat_of(e, sharp, x);
  }
  return p;
}

std::vector<ElementProfile> profiles(const EffectAlgebra& e) {
  const auto dom = sharply_dominating(e);
  const ElementSet sharp = sharp_set(e), mea = mea_set(e), hmea = hmea_set(e), umea = umea_set(e);
  const ElementSet central = center(e);
  std::vector<ElementProfile> out;
  for (ElementId x : e.elements()) {
    ElementProfile p;
    p.element = x;
    p.sharp = sharp.contains(x);
    p.principal = is_principal(e, x);
    p.central = central.contains(x);
    p.meager = mea.contains(x);
    p.hypermeager = hmea.contains(x);
    p.ultrameager = umea.contains(x);
    if (x != e.zero()) p.ord = e.ord(x);
    p.tilde = tilde_of(e, sharp, x);
    p.hat = hat_of(e, sharp, x);
    out.push_back(p);
  }
  return out;
}

std::vector<std::vector<ElementId>> check_central_distributivity(const EffectAlgebra& e) {
  std::vector<std::vector<ElementId>> out;
  for (ElementId c : center(e))
    for (ElementId x : e.elements())
      for (ElementId y : e.elements()) {
        const auto s = e.sum(x, y);
        if (!s) continue;
        const auto lhs = e.meet(c, *s);
        const auto cx = e.meet(c, x);
        const auto cy = e.meet(c, y);
        const auto rhs = (cx && cy) ? e.sum(*cx, *cy) : std::nullopt;
        if (!lhs || lhs != rhs) out.push_back({c, x, y});
      }
  return out;
}

std::vector<std::vector<ElementId>> check_sharp_multiples(const EffectAlgebra& e) {
  if (!is_homogeneous(e)) throw Error(ErrorKind::NotHomogeneous, "NotHomogeneous");
  std::vector<std::vector<ElementId>> out;
  const ElementSet sharp = sharp_set(e);
  for (ElementId y : e.elements()) {
    if (y == e.zero()) continue;
    const int n = e.ord(y);
    for (ElementId w : e.up(y) & sharp)
      for (int k = 1; k <= n; ++k)
        if (!e.leq(*e.multiple(y, k), w)) out.push_back({y, w, k});
  }
  return out;
}

std::vector<std::vector<ElementId>> check_atom_hat(const EffectAlgebra& e) {
  if (!is_homogeneous(e)) throw Error(ErrorKind::NotHomogeneous, "NotHomogeneous");
  std::vector<std::vector<ElementId>> out;
  const ElementSet sharp = sharp_set(e);
  for (ElementId a : e.elements()) {
    if (a == e.zero()) continue;
    const ElementId top = *e.multiple(a, e.ord(a));
    if (!e.meet_is_zero(a, e.complement(top))) continue;
    if (hat_of(e, sharp, a) != top) out.push_back({a, top});
  }
  return out;
}

std::vector<ElementId> check_ultrameager_criterion(const EffectAlgebra& e, const DominatingData& dom) {
  std::vector<ElementId> out;
  const ElementSet umea = umea_set(e);
  for (ElementId y : e.elements()) {
    const ElementId h = dom.hat[static_cast<std::size_t>(y)];
    const bool criterion = e.leq(y, e.ominus(h, y));
    if (criterion != umea.contains(y)) out.push_back(y);
  }
  return out;
}

}  // namespace effalg
