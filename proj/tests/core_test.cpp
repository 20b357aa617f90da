#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "test_support.hpp"

namespace antiatom {
namespace {

using V = std::vector<Element>;

TEST(NumericalSet, EmptyGapSetIsNaturalNumbers) {
  auto t = set_from_gaps({});
  EXPECT_TRUE(t.is_natural_numbers());
  EXPECT_EQ(t.frobenius(), -1);
  EXPECT_EQ(t.genus(), 0U);
  EXPECT_TRUE(t.contains(0));
  EXPECT_TRUE(t.contains(1));
}

TEST(NumericalSet, FromGaps) {
  auto t = set_from_gaps({1, 2, 3, 4});
  EXPECT_EQ(t.frobenius(), 4);
  EXPECT_EQ(t.genus(), 4U);
  EXPECT_TRUE(t.contains(5));
  EXPECT_FALSE(t.contains(3));

  auto u = set_from_gaps({4, 2, 1, 2});
  EXPECT_EQ(u.frobenius(), 4);
  EXPECT_EQ(u.genus(), 3U);
  EXPECT_EQ(u.small_elements(), (V{0, 3}));
  EXPECT_EQ(u.gaps(), (V{1, 2, 4}));
}

TEST(NumericalSet, RejectsNonPositiveGaps) {
  EXPECT_THROW(set_from_gaps({0, 2}), InvalidInput);
  EXPECT_THROW(set_from_gaps({-3}), InvalidInput);
}

TEST(NumericalSet, MembershipAboveFrobenius) {
  auto t = set_from_gaps({1, 2, 4, 7});
  for (Element x = 8; x < 100; ++x) EXPECT_TRUE(t.contains(x));
  EXPECT_FALSE(t.contains(-1));
}

TEST(Semigroup, FromGenerators) {
  auto s = NumericalSemigroup::from_generators({2, 3});
  EXPECT_EQ(s.gaps(), (V{1}));
  EXPECT_EQ(s.frobenius(), 1);

  EXPECT_EQ(NumericalSemigroup::from_generators({19, 21, 24}).frobenius(), 113);
  EXPECT_EQ(NumericalSemigroup::from_generators({6, 25, 29}).void_elements(),
            (V{17, 23, 46, 52}));
}

TEST(Semigroup, FromGeneratorsErrors) {
  EXPECT_THROW(NumericalSemigroup::from_generators({}), InvalidInput);
  EXPECT_THROW(NumericalSemigroup::from_generators({4, 6}), InvalidInput);
  EXPECT_THROW(NumericalSemigroup::from_generators({0, 3}), InvalidInput);
  EXPECT_THROW(NumericalSemigroup::from_generators({-2, 3}), InvalidInput);
}

TEST(Semigroup, GeneratorOneGivesNaturalNumbers) {
  auto s = NumericalSemigroup::from_generators({1, 5});
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_EQ(s, NumericalSemigroup{});
}

TEST(Semigroup, NaturalNumbersConventions) {
  NumericalSemigroup n0;
  EXPECT_EQ(n0.frobenius(), -1);
  EXPECT_EQ(n0.genus(), 0U);
  EXPECT_EQ(n0.multiplicity(), 1);
  EXPECT_EQ(n0.min_generators(), (V{1}));
  EXPECT_EQ(n0.embedding_dimension(), 1U);
  EXPECT_TRUE(n0.pseudo_frobenius().empty());
  EXPECT_EQ(n0.type(), 0U);
  EXPECT_TRUE(n0.void_elements().empty());
  EXPECT_EQ(descriptors(n0).min_generators, (V{1}));
  EXPECT_EQ(atom_monoid(NumericalSet{}), n0);
}

TEST(Semigroup, FromSet) {
  EXPECT_NO_THROW(NumericalSemigroup::from_set(set_from_gaps({1, 2, 3, 4})));
  EXPECT_NO_THROW(NumericalSemigroup::from_set(set_from_gaps({1, 2, 3, 5, 6, 7, 9})));
  try {
    NumericalSemigroup::from_set(set_from_gaps({2, 3, 4}));
    FAIL() << "expected NotClosedError";
  } catch (const NotClosedError& e) {
    EXPECT_EQ(e.witness(), std::make_pair(Element{1}, Element{1}));
  }
}

TEST(Semigroup, Descriptors) {
  auto d = descriptors(NumericalSemigroup::from_generators({2, 3}));
  EXPECT_EQ(d.frobenius, 1);
  EXPECT_EQ(d.genus, 1U);
  EXPECT_EQ(d.multiplicity, 2);
  EXPECT_EQ(d.embedding_dimension, 2U);
  EXPECT_EQ(d.min_generators, (V{2, 3}));

  auto s = NumericalSemigroup::from_generators({10, 101, 102, 103, 104, 105, 106, 107, 108, 109});
  EXPECT_EQ(s.embedding_dimension(), 10U);

  auto t = NumericalSemigroup::from_generators({49, 342, 349, 350});
  EXPECT_EQ(t.embedding_dimension(), 4U);
  EXPECT_EQ(t.type(), 13U);
}

TEST(Semigroup, RedundantGeneratorsAreDropped) {
  auto s = NumericalSemigroup::from_generators({3, 5, 6, 7, 8, 10});
  EXPECT_EQ(s.min_generators(), (V{3, 5, 7}));
}

TEST(Semigroup, PseudoFrobenius) {
  EXPECT_EQ(NumericalSemigroup::from_generators({19, 21, 24}).pseudo_frobenius(), (V{98, 113}));
  EXPECT_EQ(NumericalSemigroup::from_generators({8, 9, 15, 21, 28}).pseudo_frobenius(),
            (V{19, 20, 22}));
  EXPECT_EQ(NumericalSemigroup::from_generators({2, 3}).pseudo_frobenius(), (V{1}));
}

TEST(AtomMonoid, Examples) {
  auto s = NumericalSemigroup::from_generators({5, 7, 9});
  EXPECT_EQ(atom_monoid(s.as_set()), s);
  EXPECT_EQ(atom_monoid(set_from_gaps({2, 3, 4})).gaps(), (V{1, 2, 3, 4}));
  EXPECT_EQ(atom_monoid(set_from_gaps({1, 5})).gaps(), (V{1, 2, 3, 5}));
}

TEST(AtomMonoid, LargeFrobeniusUsesGeneralPath) {
  auto s = NumericalSemigroup::from_generators({10, 101, 102, 103, 104, 105, 106, 107, 108, 109});
  ASSERT_GE(s.frobenius(), 64);
  EXPECT_EQ(atom_monoid(s.as_set()), s);
  auto star = dual(s.as_set());
  EXPECT_EQ(atom_monoid(star), s);
}

TEST(Dual, Examples) {
  auto s = NumericalSemigroup::from_generators({2, 3});
  EXPECT_EQ(dual(s.as_set()), s.as_set());
  EXPECT_EQ(dual(set_from_gaps({1, 3, 4})).gaps(), (V{2, 4}));
  EXPECT_THROW(dual(NumericalSet{}), InvalidInput);
}

TEST(Dual, OfSemigroupIsSemigroupPlusVoid) {
  for (const auto& s : testing::semigroups_up_to(9)) {
    auto star = dual(s.as_set());
    std::vector<Element> expected_gaps;
    for (Element g : s.gaps()) {
      if (!s.in_void(g)) expected_gaps.push_back(g);
    }
    EXPECT_EQ(star.gaps(), expected_gaps);
  }
}

TEST(Void, Examples) {
  auto s1 = NumericalSemigroup::from_set(set_from_gaps({1, 2, 3, 5, 6, 7, 9}));
  EXPECT_EQ(s1.void_elements(), (V{2, 3, 6, 7}));
  EXPECT_TRUE(NumericalSemigroup::from_generators({3, 5}).void_elements().empty());
  EXPECT_TRUE(NumericalSemigroup{}.void_elements().empty());
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(classify_symmetry(NumericalSemigroup::from_generators({2, 3})),
            SymmetryClass::symmetric);
  auto pseudo = NumericalSemigroup::from_set(set_from_gaps({1, 2, 4}));
  EXPECT_EQ(classify_symmetry(pseudo), SymmetryClass::pseudo_symmetric);
  EXPECT_EQ(pseudo.void_elements(), (V{2}));
  auto n4 = NumericalSemigroup::from_set(set_from_gaps({1, 2, 3, 4}));
  EXPECT_EQ(classify_symmetry(n4), SymmetryClass::almost_symmetric_other);
  EXPECT_EQ(n4.type(), 4U);
  EXPECT_EQ(classify_symmetry(NumericalSemigroup::from_generators({19, 21, 24})),
            SymmetryClass::none);
  EXPECT_EQ(classify_symmetry(NumericalSemigroup{}), SymmetryClass::symmetric);
}

// Properties over every numerical set with F <= 10.
TEST(CoreProperties, AtomMonoidAndDualOnAllSmallSets) {
  for (Element f = 1; f <= 10; ++f) {
    for (const auto& t : testing::numerical_sets_with_frobenius(f)) {
      auto a = atom_monoid_set(t);
      EXPECT_EQ(a.gaps(), testing::atom_monoid_gaps_slow(t));
      EXPECT_EQ(atom_monoid_set(a), a);
      EXPECT_EQ(a.frobenius(), t.frobenius());
      for (Element x : a.small_elements()) EXPECT_TRUE(t.contains(x));
      auto star = dual(t);
      EXPECT_EQ(star.frobenius(), t.frobenius());
      EXPECT_EQ(dual(star), t);
      EXPECT_EQ(atom_monoid_set(star), a);
      bool is_semigroup = true;
      try {
        NumericalSemigroup::from_set(t);
      } catch (const NotClosedError&) {
        is_semigroup = false;
      }
      EXPECT_EQ(a == t, is_semigroup);
    }
  }
}

TEST(CoreProperties, SemigroupInvariantsUpToTwelve) {
  for (const auto& s : testing::semigroups_up_to(12)) {
    const auto g = static_cast<Element>(s.genus());
    const Element f = s.frobenius();
    EXPECT_EQ(static_cast<Element>(s.void_elements().size()), 2 * g - f - 1);
    for (Element a : s.void_elements()) EXPECT_TRUE(s.in_void(f - a));
    EXPECT_LE(static_cast<Element>(s.type()), 2 * g - f);
    const bool almost = classify_symmetry(s) != SymmetryClass::none;
    EXPECT_EQ(static_cast<Element>(s.type()) == 2 * g - f, almost);
    EXPECT_EQ(s.pseudo_frobenius(), pseudo_frobenius_definitional(s));
    EXPECT_EQ(s.pseudo_frobenius().back(), f);
    EXPECT_EQ(s.void_elements().empty(), s.type() == 1);
    // Semigroup built from its own minimal generators is itself.
    EXPECT_EQ(NumericalSemigroup::from_generators(s.min_generators()), s);
  }
}

}  // namespace
}  // namespace antiatom
