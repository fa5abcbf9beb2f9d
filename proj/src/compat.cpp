#include "effalg/compat.hpp"

#include <algorithm>
#include <unordered_set>

namespace effalg {

std::optional<CompatWitness> comp(const EffectAlgebra& e, ElementId x, ElementId y) {
  e.check(x);
  e.check(y);
  for (ElementId q : e.down(x) & e.down(y)) {
    const ElementId p = e.ominus(x, q);
    if (e.orthogonal(p, y)) return CompatWitness{p, q, e.ominus(y, q)};
  }
  return std::nullopt;
}

namespace {

struct SearchKey {
  std::uint64_t reach;
  int from;
  ElementId total;
  friend bool operator==(const SearchKey&, const SearchKey&) = default;
};

struct SearchKeyHash {
  std::size_t operator()(const SearchKey& k) const {
    std::uint64_t h = k.reach * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(k.from) << 8 | static_cast<std::uint64_t>(k.total)) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

ElementSet extend_reach(const EffectAlgebra& e, ElementSet reach, ElementId x) {
  ElementSet out = reach;
  for (ElementId r : reach)
    if (auto s = e.sum(r, x)) out.insert(*s);
  return out;
}

}  // namespace

std::optional<OrthoFamily> internal_compatibility_witness(const EffectAlgebra& e, ElementSet m, Budget& budget) {
  for (ElementId x : m) e.check(x);
  const ElementSet targets = m - ElementSet::single(e.zero());
  const std::vector<ElementId> candidates = targets.to_vector();
  std::unordered_set<SearchKey, SearchKeyHash> failed;
  std::vector<ElementId> family;

  // An element that lies below no unreached target can be dropped from any
  // successful family, so only such elements are tried.
  auto search = [&](auto&& self, int from, ElementId total, ElementSet reach) -> bool {
    if (targets.subset_of(reach)) return true;
    const SearchKey key{reach.bits(), from, total};
    if (failed.contains(key)) return false;
    budget.charge("internal compatibility", 1);
    ElementSet useful;
    for (ElementId t : targets - reach) useful |= e.down(t);
    for (int j = from; j < static_cast<int>(candidates.size()); ++j) {
      const ElementId x = candidates[static_cast<std::size_t>(j)];
      if (!useful.contains(x)) continue;
      const auto next = e.sum(total, x);
      if (!next) continue;
      family.push_back(x);
      if (self(self, j, *next, extend_reach(e, reach, x))) return true;
      family.pop_back();
    }
    failed.insert(key);
    return false;
  };
  try {
    if (!search(search, 0, e.zero(), ElementSet::single(e.zero()))) return std::nullopt;
  } catch (const BudgetExceeded&) {
    throw BudgetExceeded("internal compatibility of " + format_set(e, m), m);
  }
  return OrthoFamily::from_list(e.size(), family);
}

bool is_internally_compatible(const EffectAlgebra& e, ElementSet m, Budget& budget) {
  return internal_compatibility_witness(e, m, budget).has_value();
}

bool is_internally_compatible(const EffectAlgebra& e, ElementSet m) {
  Budget budget;
  return is_internally_compatible(e, m, budget);
}

namespace {

bool splits(const EffectAlgebra& e, ElementId u, ElementId v1, ElementId v2) {
  for (ElementId u1 : e.down(u) & e.down(v1))
    if (e.leq(e.ominus(u, u1), v2)) return true;
  return false;
}

bool riesz_scan(const EffectAlgebra& e, bool homogeneous_only) {
  for (ElementId v1 : e.elements())
    for (ElementId v2 : e.elements()) {
      const auto s = e.sum(v1, v2);
      if (!s) continue;
      for (ElementId u : e.down(*s)) {
        if (homogeneous_only && !e.leq(*s, e.complement(u))) continue;
        if (!splits(e, u, v1, v2)) return false;
      }
    }
  return true;
}

}  // namespace

bool has_rdp(const EffectAlgebra& e) { return riesz_scan(e, false); }
bool is_homogeneous(const EffectAlgebra& e) { return riesz_scan(e, true); }

bool has_dmp(const EffectAlgebra& e) {
  const int n = e.size();
  std::vector<std::optional<ElementId>> meets(static_cast<std::size_t>(n * n));
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) meets[static_cast<std::size_t>(x * n + y)] = e.meet(x, y);
  auto meet = [&](ElementId x, ElementId y) { return meets[static_cast<std::size_t>(x * n + y)]; };
  for (ElementId y = 0; y < n; ++y)
    for (ElementId x : e.down(y))
      for (ElementId z = 0; z < n; ++z)
        if (meet(x, z) && meet(y, z) && !meet(e.ominus(y, x), z)) return false;
  return true;
}

std::vector<ElementId> homogeneous_refine(const EffectAlgebra& e, ElementId u, const std::vector<ElementId>& vs) {
  e.check(u);
  const auto total = orthosum_in_order(e, vs);
  if (!total) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: the v_i are not orthogonal");
  if (!e.leq(u, *total) || !e.leq(*total, e.complement(u)))
    throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: need u <= v_1 + ... + v_n <= u'");
  if (!is_homogeneous(e)) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: algebra is not homogeneous");

  std::vector<ElementId> parts;
  auto search = [&](auto&& self, std::size_t i, ElementId rest) -> bool {
    if (i + 1 == vs.size()) {
      if (!e.leq(rest, vs[i])) return false;
      parts.push_back(rest);
      return true;
    }
    for (ElementId ui : e.down(rest) & e.down(vs[i])) {
      parts.push_back(ui);
      if (self(self, i + 1, e.ominus(rest, ui))) return true;
      parts.pop_back();
    }
    return false;
  };
  if (vs.empty()) {
    if (u == e.zero()) return {};
    throw Error(ErrorKind::NoRefinementFound, "NoRefinementFound");
  }
  if (!search(search, 0, u))
    throw Error(ErrorKind::NoRefinementFound,
                "NoRefinementFound: no refinement of " + e.name(u) + " although the algebra is homogeneous");
  return parts;
}

namespace {

// Smallest sub-effect algebra containing `seed`.
ElementSet subalgebra_closure(const EffectAlgebra& e, ElementSet seed) {
  ElementSet q = seed | ElementSet::of({e.zero(), e.unit()});
  for (bool grew = true; grew;) {
    grew = false;
    const ElementSet before = q;
    for (ElementId x : before) {
      for (ElementId y : before) {
        if (auto s = e.sum(x, y)) q.insert(*s);
        if (auto d = e.try_ominus(x, y)) q.insert(*d);
      }
    }
    grew = q != before;
  }
  return q;
}

std::vector<ElementSet> compat_masks(const EffectAlgebra& e) {
  std::vector<ElementSet> rows(static_cast<std::size_t>(e.size()));
  for (ElementId x : e.elements())
    for (ElementId y : e.elements())
      if (y >= x && comp(e, x, y)) {
        rows[static_cast<std::size_t>(x)].insert(y);
        rows[static_cast<std::size_t>(y)].insert(x);
      }
  return rows;
}

bool canonical_less(const Block& a, const Block& b) {
  if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
  const auto va = a.members.to_vector();
  const auto vb = b.members.to_vector();
  return va < vb;
}

}  // namespace

std::vector<Block> blocks(const EffectAlgebra& e, Budget& budget) {
  if (!is_homogeneous(e)) throw Error(ErrorKind::NotHomogeneous, "NotHomogeneous: blocks are defined here only for homogeneous algebras");
  const auto rows = compat_masks(e);
  auto is_clique = [&](ElementSet s) {
    for (ElementId x : s)
      if (!s.subset_of(rows[static_cast<std::size_t>(x)])) return false;
    return true;
  };

  // Every block is a pairwise compatible sub-effect algebra; grow such
  // subalgebras from {0, 1} one generator at a time.
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> pending{subalgebra_closure(e, {})};
  std::vector<ElementSet> candidates;
  seen.insert(pending.front().bits());
  while (!pending.empty()) {
    const ElementSet q = pending.back();
    pending.pop_back();
    candidates.push_back(q);
    budget.charge("block enumeration");
    ElementSet extensions = e.elements() - q;
    for (ElementId x : q) extensions &= rows[static_cast<std::size_t>(x)];
    for (ElementId x : extensions) {
      const ElementSet next = subalgebra_closure(e, q | ElementSet::single(x));
      if (seen.contains(next.bits()) || !is_clique(next)) continue;
      seen.insert(next.bits());
      pending.push_back(next);
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](ElementSet a, ElementSet b) { return canonical_less(Block{a}, Block{b}); });
  std::vector<Block> out;
  for (ElementSet q : candidates) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const Block& b) { return q.subset_of(b.members); });
    if (!covered && is_internally_compatible(e, q, budget)) out.push_back(Block{q});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Block> blocks(const EffectAlgebra& e) {
  Budget budget;
  return blocks(e, budget);
}

namespace {

void require_in_block(const EffectAlgebra& e, const Block& b, ElementSet s) {
  if (s.empty()) throw Error(ErrorKind::PreconditionViolated, "empty set");
  if (!s.subset_of(b.members))
    throw Error(ErrorKind::NotInBlock, "NotInBlock: " + format_set(e, s - b.members));
}

}  // namespace

std::optional<ElementId> block_glb(const EffectAlgebra& e, const Block& b, ElementSet s) {
  require_in_block(e, b, s);
  const ElementSet lb = e.lower_bounds(s) & b.members;
  for (ElementId g : lb)
    if (lb.subset_of(e.down(g))) return g;
  return std::nullopt;
}

std::optional<ElementId> block_lub(const EffectAlgebra& e, const Block& b, ElementSet s) {
  require_in_block(e, b, s);
  const ElementSet ub = e.upper_bounds(s) & b.members;
  for (ElementId g : ub)
    if (ub.subset_of(e.up(g))) return g;
  return std::nullopt;
}

bool block_meet_is_zero(const EffectAlgebra& e, const Block& b, ElementId x, ElementId y) {
  return (e.down(x) & e.down(y) & b.members) == ElementSet::single(e.zero());
}

bool block_is_lattice(const EffectAlgebra& e, const Block& b) {
  for (ElementId x : b.members)
    for (ElementId y : b.members) {
      if (y <= x) continue;
      const ElementSet pair = ElementSet::of({x, y});
      if (!block_glb(e, b, pair) || !block_lub(e, b, pair)) return false;
    }
  return true;
}

MvCoverReport mv_cover_check(const EffectAlgebra& e, Budget& budget) {
  MvCoverReport rep;
  ElementSet covered;
  bool all_mv = true;
  for (const Block& b : blocks(e, budget)) {
    BlockVerdict v{b};
    v.sub_effect_algebra = is_sub_effect_algebra(e, b.members);
    v.lattice = block_is_lattice(e, b);
    v.rdp = v.sub_effect_algebra && has_rdp(restrict_to(e, b.members).algebra);
    all_mv = all_mv && v.lattice && v.rdp;
    covered |= b.members;
    rep.blocks.push_back(v);
  }
  rep.union_is_whole = covered == e.elements();
  rep.covered = all_mv && rep.union_is_whole;
  return rep;
}

MvCoverReport mv_cover_check(const EffectAlgebra& e) {
  Budget budget;
  return mv_cover_check(e, budget);
}

SoberReport check_sober(const EffectAlgebra& e, const std::optional<DominatingData>& dom, Budget& budget) {
  if (!dom) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: not sharply dominating");
  if (!is_homogeneous(e)) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: not homogeneous");
  const auto bs = blocks(e, budget);
  const ElementSet mea = mea_set(e);
  auto hat = [&](ElementId x) { return dom->hat[static_cast<std::size_t>(x)]; };

  bool closed = true;
  for (const Block& b : bs)
    for (ElementId v : b.members) closed = closed && b.members.contains(hat(v));

  SoberReport rep;
  for (int c = 0; c < 4; ++c) {
    const bool meager_only = c == 1 || c == 3;
    const bool absolute = c >= 2;
    bool ok = closed;
    for (const Block& b : bs) {
      const ElementSet scope = meager_only ? (b.members & mea) : b.members;
      for (ElementId y : scope)
        for (ElementId z : scope) {
          if (!ok) break;
          if (!block_meet_is_zero(e, b, y, z)) continue;
          ok = absolute ? e.meet_is_zero(hat(y), hat(z)) : block_meet_is_zero(e, b, hat(y), hat(z));
        }
    }
    rep.conditions[c] = ok;
  }
  rep.sober = rep.conditions[0];
  rep.consistent = std::all_of(std::begin(rep.conditions), std::end(rep.conditions),
                               [&](bool c) { return c == rep.sober; });
  return rep;
}

bool is_sober(const EffectAlgebra& e, const std::optional<DominatingData>& dom) {
  Budget budget;
  return check_sober(e, dom, budget).sober;
}

std::vector<JoinDisagreement> join_agreement_scan(const EffectAlgebra& e, bool all, Budget& budget) {
  if (!is_homogeneous(e)) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: not homogeneous");
  const auto bs = blocks(e, budget);
  for (const Block& b : bs)
    if (!block_is_lattice(e, b))
      throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: block " + format_set(e, b.members) + " is not a lattice");
  std::vector<JoinDisagreement> out;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const ElementSet common = bs[i].members & bs[j].members;
      for (ElementId x : common)
        for (ElementId y : common) {
          if (y < x) continue;
          const ElementSet pair = ElementSet::of({x, y});
          const auto ja = block_lub(e, bs[i], pair);
          const auto jb = block_lub(e, bs[j], pair);
          if (ja != jb) {
            out.push_back({x, y, bs[i], bs[j], ja, jb});
            if (!all) return out;
          }
        }
    }
  return out;
}

std::optional<JoinDisagreement> join_agreement_scan(const EffectAlgebra& e) {
  Budget budget;
  auto found = join_agreement_scan(e, false, budget);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace effalg
