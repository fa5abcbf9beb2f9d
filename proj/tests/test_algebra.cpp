#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "effalg/algebra.hpp"
#include "effalg/builtin.hpp"
#include "effalg/io.hpp"
#include "oracle.hpp"

using namespace effalg;

namespace {

EffectAlgebra ex(const char* name) { return EffectAlgebra::validate(to_table(builtin(name))); }

SumTable table_of(const char* text) { return to_table(parse_algebra(text)); }

AxiomFailure first_failure(const char* text) {
  const auto f = find_axiom_failures(table_of(text), true);
  EXPECT_EQ(f.size(), 1u);
  return f.empty() ? AxiomFailure{} : f.front();
}

}  // namespace

TEST(ElementSet, BasicOps) {
  ElementSet s = ElementSet::of({1, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ((s & ElementSet::of({3, 4})), ElementSet::single(3));
  EXPECT_EQ((s - ElementSet::of({1})).to_vector(), (std::vector<ElementId>{3, 5}));
  EXPECT_TRUE(ElementSet::of({1, 5}).subset_of(s));
  EXPECT_EQ(ElementSet::all(64).size(), 64);
}

TEST(Validate, Chain) {
  const auto e = ex("chain:4");
  EXPECT_EQ(e.size(), 5);
  EXPECT_EQ(e.ord(e.id("b")), 4);
  EXPECT_TRUE(e.leq(e.id("b"), e.id("3b")));
  EXPECT_EQ(e.complement(e.id("b")), e.id("3b"));
  EXPECT_EQ(e.ominus(e.id("3b"), e.id("b")), e.id("2b"));
  EXPECT_TRUE(e.is_lattice());
  EXPECT_FALSE(e.is_orthoalgebra());
}

TEST(Validate, OrthoalgebraOnBoolean) {
  const auto e = ex("boolean:3");
  EXPECT_TRUE(e.is_orthoalgebra());
  EXPECT_TRUE(e.is_lattice());
  EXPECT_EQ(e.atoms().size(), 3);
}

TEST(Validate, UnitPlusNonzeroIsEiv) {
  const auto f = first_failure("elements a\nsum 1 a 1\n");
  EXPECT_EQ(f.axiom, Axiom::Eiv);
  EXPECT_THROW(EffectAlgebra::validate(table_of("elements a\nsum 1 a 1\n")), AxiomViolation);
}

TEST(Validate, MissingComplementIsEiii) {
  // a has no complement at all.
  const auto f = first_failure("elements a b\nsum b b 1\n");
  EXPECT_EQ(f.axiom, Axiom::Eiii);
}

TEST(Validate, TwoComplementsIsEiii) {
  const auto f = first_failure("elements a b\nsum a a 1\nsum a b 1\nsum b b 1\n");
  EXPECT_EQ(f.axiom, Axiom::Eiii);
}

TEST(Validate, NonCommutativeIsEi) {
  SumTable u({"0", "a", "b", "1"}, 0, 3);
  u.add_directed(1, 2, 3);
  u.add(1, 1, 3);
  u.add(2, 2, 3);
  const auto f = find_axiom_failures(u, true);
  ASSERT_FALSE(f.empty());
  EXPECT_EQ(f.front().axiom, Axiom::Ei);
}

TEST(Validate, AssociativityDefectReportsEii) {
  // c+a = 1 and a+c = 1 with b = a+a, but (a+a)+? and a+(a+?) disagree.
  const char* text = "elements a b c\nsum a c 1\nsum a a b\nsum b b 1\n";
  const auto f = first_failure(text);
  EXPECT_EQ(f.axiom, Axiom::Eii);
  EXPECT_EQ(f.witness.size(), 3u);
}

TEST(Validate, DuplicateContradiction) {
  EXPECT_THROW(
      {
        try {
          table_of("elements a\nsum a a 1\nsum a a a\n");
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::DuplicateContradiction);
          throw;
        }
      },
      Error);
}

TEST(Validate, ZeroIdentityContradiction) {
  // 0 + a = 1 contradicts the implicit 0 + a = a.
  EXPECT_THROW(
      {
        try {
          find_axiom_failures(table_of("elements a\nsum a a 1\nsum 0 a 1\n"), true);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::DuplicateContradiction);
          throw;
        }
      },
      Error);
}

TEST(Validate, ZeroEqualsOne) {
  SumTable t({"z"}, 0, 0);
  try {
    EffectAlgebra::validate(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroEqualsOne);
  }
}

TEST(Validate, CapExceeded) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("x" + std::to_string(i));
  try {
    SumTable t(names, 0, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Order, ZeroHasNoOrder) {
  const auto e = ex("ex1");
  try {
    e.ord(e.zero());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroHasNoOrder);
  }
}

TEST(Order, OminusRequiresBelow) {
  const auto e = ex("ex1");
  try {
    e.ominus(e.id("a"), e.id("c"));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotBelow);
  }
}

TEST(Order, OrdersInExamples) {
  const auto e1 = ex("ex1");
  EXPECT_EQ(e1.ord(e1.id("b")), 4);
  EXPECT_EQ(e1.ord(e1.id("a")), 1);
  EXPECT_EQ(e1.ord(e1.id("2b")), 2);
  const auto e2 = ex("ex2");
  EXPECT_EQ(e2.ord(e2.id("b")), 6);
  EXPECT_EQ(e2.ord(e2.id("2b")), 3);
  EXPECT_EQ(e2.ord(e2.id("3b")), 2);
}

TEST(Order, GlbLub) {
  const auto e = ex("ex3");
  EXPECT_FALSE(e.join(e.id("a"), e.id("b")).has_value());
  EXPECT_EQ(e.meet(e.id("a"), e.id("b")), e.zero());
  EXPECT_EQ(e.join(e.id("a"), e.zero()), e.id("a"));
  EXPECT_THROW(e.glb(ElementSet{}), Error);
}

TEST(Orthosum, FamiliesAndPartialSums) {
  const auto e = ex("ex1");
  const ElementId b = e.id("b");
  OrthoFamily f;
  f.add(b, 3);
  EXPECT_EQ(orthosum(e, f), e.id("3b"));
  EXPECT_EQ(partial_sums(e, f), ElementSet::of({e.zero(), b, e.id("2b"), e.id("3b")}));
  OrthoFamily g;
  g.add(e.id("a"));
  g.add(e.id("2b"));
  try {
    check_orthogonal(e, g);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotOrthogonal);
  }
  OrthoFamily h;
  h.add(b, 5);
  EXPECT_THROW(orthosum(e, h), Error);
}

TEST(Orthosum, OrderIndependence) {
  std::mt19937 rng(5);
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    for (int trial = 0; trial < 20; ++trial) {
      // Grow a random orthogonal family, then sum it in shuffled orders.
      std::vector<ElementId> fam;
      ElementId total = e.zero();
      for (int step = 0; step < 6; ++step) {
        const ElementId x = std::uniform_int_distribution<int>(1, e.size() - 1)(rng);
        if (auto s = e.sum(total, x)) {
          fam.push_back(x);
          total = *s;
        }
      }
      for (int k = 0; k < 4; ++k) {
        std::shuffle(fam.begin(), fam.end(), rng);
        EXPECT_EQ(orthosum_in_order(e, fam), total) << entry.name;
      }
    }
  }
}

TEST(Properties, CorpusLawsAgainstOracle) {
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    const oracle::Naive o(entry.file);
    ASSERT_EQ(e.size(), o.n()) << entry.name;
    for (ElementId x = 0; x < e.size(); ++x) {
      EXPECT_EQ(e.complement(e.complement(x)), x) << entry.name;
      EXPECT_EQ(e.complement(x), o.comp(x)) << entry.name;
      if (x != e.zero()) EXPECT_EQ(e.ord(x), o.ord(x)) << entry.name;
      for (ElementId y = 0; y < e.size(); ++y) {
        ASSERT_EQ(e.leq(x, y), o.leq(x, y)) << entry.name << " " << e.name(x) << " " << e.name(y);
        // x <= y iff y' <= x'
        EXPECT_EQ(e.leq(x, y), e.leq(e.complement(y), e.complement(x))) << entry.name;
        if (e.leq(x, y)) EXPECT_EQ(e.ominus(y, x), o.minus(y, x)) << entry.name;
        if (auto s = e.sum(x, y)) EXPECT_EQ(e.ominus(*s, x), y) << entry.name;
      }
    }
  }
}

TEST(Properties, FinitenessChecks) {
  for (const auto& entry : corpus::all()) {
    const auto e = corpus::load(entry);
    EXPECT_TRUE(e.is_archimedean()) << entry.name;
    Budget b;
    EXPECT_TRUE(check_orthocomplete(e, b).orthocomplete) << entry.name;
  }
}

TEST(Orthocomplete, BudgetExceeded) {
  const auto e = ex("boolean:4");
  Budget tiny(10);
  EXPECT_THROW(check_orthocomplete(e, tiny), BudgetExceeded);
}

TEST(Restrict, BlockOfEx3) {
  const auto e = ex("ex3");
  ElementSet m;
  for (const char* n : {"0", "a", "b", "f", "a'", "b'", "f'", "1"}) m.insert(e.id(n));
  const auto sub = restrict_to(e, m);
  EXPECT_EQ(sub.algebra.size(), 8);
  EXPECT_TRUE(sub.algebra.is_lattice());
  EXPECT_TRUE(sub.algebra.is_orthoalgebra());
}

TEST(Format, SetUsesNames) {
  const auto e = ex("ex1");
  EXPECT_EQ(format_set(e, ElementSet::of({e.zero(), e.id("b")})), "{0, b}");
}
