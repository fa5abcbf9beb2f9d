#include "effalg/structure.hpp"

#include <algorithm>
#include <random>

#include "effalg/classify.hpp"

namespace effalg {

ElementSet maximal_lower_bounds(const EffectAlgebra& e, ElementId u, ElementId v) {
  e.check(u);
  e.check(v);
  return e.maximal(e.down(u) & e.down(v));
}

ElementSet minimal_upper_bounds(const EffectAlgebra& e, ElementId u, ElementId v) {
  e.check(u);
  e.check(v);
  return e.minimal(e.up(u) & e.up(v));
}

bool has_maximality_property(const EffectAlgebra& e) {
  for (ElementId u : e.elements())
    for (ElementId v : e.elements()) {
      const ElementSet lower = e.down(u) & e.down(v);
      const ElementSet tops = e.maximal(lower);
      if (tops.empty()) return false;
      ElementSet dominated;
      for (ElementId m : tops) dominated |= e.down(m);
      if (!lower.subset_of(dominated)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// (W+)

namespace {

ElementSet extend_reach(const EffectAlgebra& e, ElementSet reach, ElementId x) {
  ElementSet out = reach;
  for (ElementId r : reach)
    if (auto s = e.sum(r, x)) out.insert(*s);
  return out;
}

// Checks one orthogonal set; appends witnesses, returns false on violation.
bool wplus_for_set(const EffectAlgebra& e, ElementSet a, ElementSet reach, bool all, WPlusReport& rep) {
  const ElementSet ub = e.upper_bounds(reach);
  bool ok = true;
  for (ElementId u : ub)
    for (ElementId v : ub) {
      if (v < u) continue;
      if ((ub & e.down(u) & e.down(v)).empty()) {
        ok = false;
        rep.witnesses.push_back({a, u, v});
        if (!all) return false;
      }
    }
  return ok;
}

}  // namespace

WPlusReport check_condition_wplus(const EffectAlgebra& e, Budget& budget, WPlusMode mode, bool all_witnesses,
                                  int samples, unsigned seed) {
  WPlusReport rep;
  const bool exhaustive = mode == WPlusMode::Exhaustive || (mode == WPlusMode::Auto && e.size() <= 20);
  rep.exhaustive = exhaustive;
  const ElementId zero = e.zero();

  if (exhaustive) {
    // Orthogonal sets of nonzero elements; adding 0 leaves A^(+) unchanged.
    auto visit = [&](auto&& self, ElementId from, ElementSet a, ElementId total, ElementSet reach) -> bool {
      budget.charge("condition (W+)");
      ++rep.sets_checked;
      if (!wplus_for_set(e, a, reach, all_witnesses, rep)) {
        rep.holds = false;
        if (!all_witnesses) return false;
      }
      for (ElementId x = from; x < e.size(); ++x) {
        if (x == zero) continue;
        const auto next = e.sum(total, x);
        if (!next) continue;
        if (!self(self, x + 1, a | ElementSet::single(x), *next, extend_reach(e, reach, x))) return false;
      }
      return true;
    };
    visit(visit, 0, {}, zero, ElementSet::single(zero));
    return rep;
  }

  std::mt19937 rng(seed);
  std::vector<ElementId> order = (e.elements() - ElementSet::single(zero)).to_vector();
  for (int i = 0; i < samples; ++i) {
    budget.charge("condition (W+) sampling");
    std::shuffle(order.begin(), order.end(), rng);
    ElementSet a;
    ElementId total = zero;
    ElementSet reach = ElementSet::single(zero);
    for (ElementId x : order) {
      if (rng() % 2 == 0) continue;
      if (auto next = e.sum(total, x)) {
        a.insert(x);
        total = *next;
        reach = extend_reach(e, reach, x);
      }
    }
    ++rep.sets_checked;
    if (!wplus_for_set(e, a, reach, all_witnesses, rep)) {
      rep.holds = false;
      if (!all_witnesses) break;
    }
  }
  return rep;
}

bool has_condition_wplus(const EffectAlgebra& e) {
  Budget budget;
  return check_condition_wplus(e, budget, WPlusMode::Exhaustive).holds;
}

// ---------------------------------------------------------------------------
// Shifting lemma

std::optional<std::string> minimax_defect(const EffectAlgebra& e, const MinimaxStructure& m) {
  if (!e.leq(m.y, m.u)) return "y is not below u";
  if (!e.leq(m.z, m.v)) return "z is not below v";
  if (!e.meet_is_zero(m.a, m.b)) return "a /\\ b != 0";
  const ElementSet lower = maximal_lower_bounds(e, m.y, m.z);
  if (!lower.contains(m.a) || !lower.contains(m.b)) return "a, b are not maximal lower bounds of y, z";
  const ElementSet upper = minimal_upper_bounds(e, m.a, m.b);
  if (!upper.contains(m.y) || !upper.contains(m.z)) return "y, z are not minimal upper bounds of a, b";
  const ElementId ya = e.ominus(m.y, m.a), za = e.ominus(m.z, m.a);
  const ElementId yb = e.ominus(m.y, m.b), zb = e.ominus(m.z, m.b);
  if (!e.meet_is_zero(ya, za)) return "(y - a) /\\ (z - a) != 0";
  if (!e.meet_is_zero(yb, zb)) return "(y - b) /\\ (z - b) != 0";
  if (!e.meet_is_zero(ya, yb)) return "(y - a) /\\ (y - b) != 0";
  if (!e.meet_is_zero(za, zb)) return "(z - a) /\\ (z - b) != 0";
  return std::nullopt;
}

MinimaxStructure shifting(const EffectAlgebra& e, ElementId u, ElementId v, ElementId a1, ElementId b1) {
  const ElementSet lower = maximal_lower_bounds(e, u, v);
  if (!lower.contains(a1) || !lower.contains(b1))
    throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: a1, b1 must be maximal lower bounds of u, v");
  if (!has_maximality_property(e))
    throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: no maximality property");

  const ElementId c = maximal_lower_bounds(e, a1, b1).first();
  const ElementId a = e.ominus(a1, c), b = e.ominus(b1, c);
  const ElementId y1 = e.ominus(u, c), z1 = e.ominus(v, c);
  for (ElementId y : e.down(y1))
    for (ElementId z : e.down(z1)) {
      const MinimaxStructure m{u, v, y, z, a, b, c};
      if (!minimax_defect(e, m)) return m;
    }
  throw Error(ErrorKind::NoStructureFound,
              "NoStructureFound: no minimax structure below (" + e.name(y1) + ", " + e.name(z1) + ")");
}

// ---------------------------------------------------------------------------

HyperDecomposition hypermeager_decomposition(const EffectAlgebra& e, ElementId y, Budget& budget) {
  e.check(y);
  if (!mea_set(e).contains(y)) throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: " + e.name(y) + " is not meager");
  if (!e.is_archimedean() || !check_condition_wplus(e, budget, WPlusMode::Exhaustive).holds)
    throw Error(ErrorKind::PreconditionViolated, "PreconditionViolated: (W+) does not hold");

  const ElementSet hmea = hmea_set(e) - ElementSet::single(e.zero());
  HyperDecomposition out{y, OrthoFamily(std::vector<int>(static_cast<std::size_t>(e.size()), 0))};
  ElementId rest = y;
  while (rest != e.zero()) {
    const ElementSet below = e.maximal(hmea & e.down(rest));
    if (below.empty())
      throw Error(ErrorKind::Stuck, "Stuck: nonzero meager remainder " + e.name(rest) + " has no hypermeager element below");
    const ElementId h = below.first();
    out.parts.add(h);
    rest = e.ominus(rest, h);
  }
  return out;
}

HyperDecomposition hypermeager_decomposition(const EffectAlgebra& e, ElementId y) {
  Budget budget;
  return hypermeager_decomposition(e, y, budget);
}

// ---------------------------------------------------------------------------
// Theorem suite

const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Holds: return "holds";
    case CheckOutcome::Violated: return "violated";
    case CheckOutcome::Vacuous: return "vacuous";
  }
  return "?";
}

bool TheoremReport::any_violated() const {
  return std::any_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.outcome == CheckOutcome::Violated; });
}

namespace {

class CheckBuilder {
 public:
  CheckBuilder(std::string id, std::string statement, bool all) : all_(all) {
    check_.id = std::move(id);
    check_.statement = std::move(statement);
    check_.outcome = CheckOutcome::Holds;
  }
  /// Records a violation; returns true when scanning should stop.
  bool fail(std::string witness) {
    check_.outcome = CheckOutcome::Violated;
    check_.witnesses.push_back(std::move(witness));
    return !all_;
  }
  bool stopped() const { return check_.outcome == CheckOutcome::Violated && !all_; }
  TheoremCheck vacuous(std::string why) {
    check_.outcome = CheckOutcome::Vacuous;
    check_.note = std::move(why);
    return check_;
  }
  TheoremCheck done(std::string note = {}) {
    check_.note = std::move(note);
    return check_;
  }

 private:
  TheoremCheck check_;
  bool all_;
};

std::string pair_text(const EffectAlgebra& e, ElementId x, ElementId y) { return "(" + e.name(x) + ", " + e.name(y) + ")"; }

}  // namespace

TheoremReport theorem_suite(const EffectAlgebra& e, Budget& budget, bool all) {
  const bool homog = is_homogeneous(e);
  const bool maxprop = has_maximality_property(e);
  const auto dom = sharply_dominating(e);
  std::vector<Block> bs;
  if (homog) bs = blocks(e, budget);
  const bool base = homog && maxprop;
  const std::string why_base = !homog ? "not homogeneous" : "no maximality property";
  auto blocks_containing = [&](ElementId x) {
    std::vector<const Block*> out;
    for (const Block& b : bs)
      if (b.members.contains(x)) out.push_back(&b);
    return out;
  };

  TheoremReport rep;

  {
    CheckBuilder c("a", "homogeneous + maximality => every block is lattice ordered", all);
    if (!base) {
      rep.checks.push_back(c.vacuous(why_base));
    } else {
      for (const Block& b : bs)
        if (!block_is_lattice(e, b) && c.fail("block " + format_set(e, b.members))) break;
      rep.checks.push_back(c.done(std::to_string(bs.size()) + " blocks"));
    }
  }
  {
    CheckBuilder c("b", "homogeneous + maximality => hypermeager pairs have a meet", all);
    if (!base) {
      rep.checks.push_back(c.vacuous(why_base));
    } else {
      const ElementSet h = hmea_set(e);
      for (ElementId u : h)
        for (ElementId v : h)
          if (!c.stopped() && v > u && !e.meet(u, v)) c.fail(pair_text(e, u, v) + " has no meet");
      rep.checks.push_back(c.done());
    }
  }
  {
    CheckBuilder c("c", "homogeneous + maximality => orthogonal u, v have u /\\ v, a join in [0, u + v], and [0, u /\\ v] lies in every block containing u or v", all);
    if (!base) {
      rep.checks.push_back(c.vacuous(why_base));
    } else {
      for (ElementId u : e.elements())
        for (ElementId v : e.elements()) {
          if (c.stopped() || v < u) continue;
          const auto s = e.sum(u, v);
          if (!s) continue;
          const auto m = e.meet(u, v);
          if (!m) {
            c.fail(pair_text(e, u, v) + " has no meet");
            continue;
          }
          const ElementSet ub = e.upper_bounds(ElementSet::of({u, v})) & e.down(*s);
          if (e.minimal(ub).size() != 1) {
            c.fail(pair_text(e, u, v) + " has no join in [0, u + v]");
            continue;
          }
          for (const Block* b : blocks_containing(u))
            if (!e.down(*m).subset_of(b->members)) c.fail(pair_text(e, u, v) + ": [0, u /\\ v] not in " + format_set(e, b->members));
          for (const Block* b : blocks_containing(v))
            if (!e.down(*m).subset_of(b->members)) c.fail(pair_text(e, u, v) + ": [0, u /\\ v] not in " + format_set(e, b->members));
        }
      rep.checks.push_back(c.done());
    }
  }
  {
    CheckBuilder c("d", "homogeneous + maximality => u /\\ u' and u \\/ u' exist and [0, u /\\ u'] lies in every block containing u", all);
    if (!base) {
      rep.checks.push_back(c.vacuous(why_base));
    } else {
      for (ElementId u : e.elements()) {
        if (c.stopped()) break;
        const ElementId uc = e.complement(u);
        const auto m = e.meet(u, uc);
        if (!m || !e.join(u, uc)) {
          c.fail(e.name(u) + ": u /\\ u' or u \\/ u' missing");
          continue;
        }
        for (const Block* b : blocks_containing(u))
          if (!e.down(*m).subset_of(b->members)) c.fail(e.name(u) + ": [0, u /\\ u'] not in " + format_set(e, b->members));
      }
      rep.checks.push_back(c.done());
    }
  }
  {
    CheckBuilder c("e", "homogeneous + maximality => u /\\_B v = 0 implies u /\\ v = 0", all);
    if (!base) {
      rep.checks.push_back(c.vacuous(!homog ? "not homogeneous (blocks undefined)" : why_base));
    } else {
      for (const Block& b : bs)
        for (ElementId u : b.members)
          for (ElementId v : b.members)
            if (!c.stopped() && v > u && block_meet_is_zero(e, b, u, v) && !e.meet_is_zero(u, v))
              c.fail(pair_text(e, u, v) + " in block " + format_set(e, b.members));
      rep.checks.push_back(c.done());
    }
  }
  {
    CheckBuilder c("f", "sharply dominating + homogeneous + maximality => y /\\ (hat y - y) = y /\\ y' for meager y", all);
    if (!base || !dom) {
      rep.checks.push_back(c.vacuous(!dom ? "not sharply dominating" : why_base));
    } else {
      const ElementSet mea = mea_set(e);
      for (ElementId y : mea) {
        if (c.stopped()) break;
        const ElementId gap = e.ominus(dom->hat[static_cast<std::size_t>(y)], y);
        const auto lhs = e.meet(y, gap);
        const auto rhs = e.meet(y, e.complement(y));
        if (!lhs || lhs != rhs) c.fail(e.name(y));
      }
      rep.checks.push_back(c.done(mea.size() == 1 ? "only y = 0 is meager" : ""));
    }
  }
  {
    CheckBuilder c("g", "homogeneous => UMea = HMea", all);
    if (!homog) {
      rep.checks.push_back(c.vacuous("not homogeneous"));
    } else {
      const ElementSet u = umea_set(e), h = hmea_set(e);
      if (u != h) c.fail("UMea " + format_set(e, u) + " != HMea " + format_set(e, h));
      rep.checks.push_back(c.done());
    }
  }
  return rep;
}

TheoremReport theorem_suite(const EffectAlgebra& e) {
  Budget budget;
  return theorem_suite(e, budget);
}

}  // namespace effalg
