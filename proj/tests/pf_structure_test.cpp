#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "test_support.hpp"

namespace antiatom {
namespace {

using V = std::vector<Element>;
using Edges = std::vector<std::pair<Element, Element>>;
using Triangles = std::vector<FrobeniusTriangle>;

NumericalSemigroup sg(std::initializer_list<Element> generators) {
  return NumericalSemigroup::from_generators(generators);
}

NumericalSemigroup sg_gaps(std::initializer_list<Element> gaps) {
  return NumericalSemigroup::from_set(set_from_gaps(gaps));
}

TEST(PFGraph, NFour) {
  auto g = build_gpf(sg_gaps({1, 2, 3, 4}));
  EXPECT_EQ(g.vertices(), (V{1, 2, 3}));
  EXPECT_EQ(g.edges(), (Edges{{1, 3}}));
  EXPECT_EQ(g.loops(), (V{2}));
  EXPECT_EQ(g.kappa(), 2U);
  EXPECT_EQ(g.components(), (std::vector<V>{{1, 3}, {2}}));
}

TEST(PFGraph, Connected) {
  EXPECT_EQ(build_gpf(sg({8, 12, 13, 23, 30})).kappa(), 1U);
}

TEST(PFGraph, FiveMultiplesSix) {
  auto s = sg({5, 31, 32, 33, 34});
  EXPECT_EQ(s.pseudo_frobenius(), (V{26, 27, 28, 29}));
  auto g = build_gpf(s);
  EXPECT_EQ(g.kappa(), 2U);
  EXPECT_EQ(g.edges(), (Edges{{26, 28}}));
  EXPECT_EQ(g.loops(), (V{27}));
}

TEST(PFGraph, SymmetricIsEmpty) {
  auto g = build_gpf(sg({3, 5}));
  EXPECT_EQ(g.size(), 0U);
  EXPECT_EQ(g.kappa(), 0U);
}

TEST(Triangles, FiveMultiples) {
  for (Element n = 1; n <= 6; ++n) {
    std::vector<Element> gens{5};
    for (Element k = 1; k <= 4; ++k) gens.push_back(5 * n + k);
    auto s = NumericalSemigroup::from_generators(gens);
    EXPECT_EQ(frobenius_triangles(s),
              (Triangles{{5 * n - 4, 1, 2}, {5 * n - 4, 2, 1}, {5 * n - 3, 1, 1}}))
        << "n=" << n;
  }
}

TEST(Triangles, ContainsKnownTriangle) {
  auto s = sg({8, 12, 13, 23, 30});
  EXPECT_EQ(s.frobenius(), 27);
  EXPECT_EQ(s.pseudo_frobenius(), (V{17, 18, 22, 27}));
  EXPECT_EQ(frobenius_triangles(s), (Triangles{{17, 5, 5}}));
  EXPECT_FALSE(is_triangle_free(s));
  EXPECT_TRUE(is_p_minimal(s, count_P(s)));
  EXPECT_EQ(count_P(s), 2U);
}

TEST(Triangles, TriangleFreeExamples) {
  auto s = sg({8, 9, 15, 21, 28});
  EXPECT_TRUE(frobenius_triangles(s).empty());
  EXPECT_TRUE(is_triangle_free(s));
  EXPECT_EQ(build_gpf(s).kappa(), 1U);
  EXPECT_TRUE(is_p_minimal(s, 2));

  auto sym = sg({3, 5});
  EXPECT_TRUE(frobenius_triangles(sym).empty());
  EXPECT_TRUE(is_triangle_free(sym));
  EXPECT_TRUE(is_p_minimal(sym, 1));
  EXPECT_FALSE(is_p_minimal(sym, 2));
}

TEST(Triangles, TrianglesForNonPseudoFrobenius) {
  auto s = sg_gaps({1, 2, 3, 4});
  EXPECT_TRUE(triangles_for(s, 4).empty());
  EXPECT_TRUE(triangles_for(s, 7).empty());
  EXPECT_EQ(triangles_for(s, 1), (Triangles{{1, 1, 2}, {1, 2, 1}}));
}

TEST(IdealSatisfies, Examples) {
  auto s = sg_gaps({1, 2, 3, 4});
  auto poset = build_void_poset(s);
  auto ideal = [&](V values) { return OrderIdeal{poset.mask_of(values)}; };
  EXPECT_TRUE(ideal_satisfies(poset, ideal({1}), {1, 1, 2}));
  for (const auto& t : frobenius_triangles(s)) {
    EXPECT_FALSE(ideal_satisfies(poset, ideal({}), t));
    EXPECT_FALSE(ideal_satisfies(poset, ideal({1, 2, 3}), t));
  }
}

TEST(PFStructureProperties, TrianglesAgainstDefinition) {
  for (const auto& s : testing::semigroups_up_to(12)) {
    const Element f = s.frobenius();
    Triangles expected;
    for (Element p : s.pseudo_frobenius()) {
      for (Element x : s.void_elements()) {
        for (Element y : s.void_elements()) {
          if (p + x + y == f) expected.push_back({p, x, y});
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    auto tr = frobenius_triangles(s);
    EXPECT_EQ(tr, expected);
    EXPECT_EQ(tr.empty(), is_triangle_free(s));

    const auto& m = s.void_elements();
    if (!m.empty()) {
      Element top = m.back();
      EXPECT_TRUE(s.is_pseudo_frobenius(top));
      EXPECT_NE(top, f);
      EXPECT_TRUE(triangles_for(s, top).empty());
    }
  }
}

TEST(PFStructureProperties, CountBoundsAgainstCensus) {
  for (Element f = 1; f <= 12; ++f) {
    for (const auto& [s, p] : census_by_frobenius(f).counts) {
      const std::uint64_t lower = std::uint64_t{1} << build_gpf(s).kappa();
      EXPECT_GE(p, lower);
      if (is_triangle_free(s)) EXPECT_EQ(p, lower);
      EXPECT_EQ(is_p_minimal(s, p), p == lower);
    }
  }
}

TEST(PFStructureProperties, TriangleLocalStructure) {
  for (const auto& s : testing::semigroups_up_to(10)) {
    const Element f = s.frobenius();
    const auto& m = s.void_elements();
    auto tr = frobenius_triangles(s);
    for (const auto& t : tr) {
      for (Element a : m) {
        if (t.x - a > 0 && s.contains(t.x - a)) EXPECT_TRUE(s.contains(f - t.y - a));
        if (a - (f - t.y) > 0 && s.contains(a - (f - t.y))) EXPECT_TRUE(s.contains(a - t.x));
      }
    }
    if (tr.empty()) continue;
    auto poset = build_void_poset(s);
    for (const auto& ideal : order_ideals(poset)) {
      for (const auto& t : tr) {
        if (!ideal_satisfies(poset, ideal, t)) continue;
        const std::size_t xi = *poset.index_of(t.x);
        const std::size_t zi = *poset.index_of(f - t.y);
        for (std::size_t j = 0; j < poset.size(); ++j) {
          if (j == xi || j == zi) continue;
          if (ideal.mask.test(j)) EXPECT_FALSE(poset.leq(j, xi));
          if (!ideal.mask.test(j)) EXPECT_FALSE(poset.leq(zi, j));
        }
      }
    }
  }
}

}  // namespace
}  // namespace antiatom
