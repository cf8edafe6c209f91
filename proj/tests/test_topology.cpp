#include <gtest/gtest.h>

#include "primal/error.hpp"
#include "primal/functional_map.hpp"
#include "primal/rho.hpp"
#include "primal/topology.hpp"

using namespace primal;

TEST(MinimalOpens, Examples) {
  const auto constant = minimal_opens(FunctionalMap::load({0, 0, 0}));
  EXPECT_EQ(constant[0], PointSet(3, {0, 1, 2}));
  EXPECT_EQ(constant[1], PointSet(3, {1}));
  EXPECT_EQ(constant[2], PointSet(3, {2}));

  const auto cycle = minimal_opens(FunctionalMap::load({1, 2, 0}));
  for (Point x = 0; x < 3; ++x) EXPECT_TRUE(cycle[x].is_full());

  const auto id = minimal_opens(FunctionalMap::load({0, 1}));
  EXPECT_EQ(id[0], PointSet(2, {0}));
  EXPECT_EQ(id[1], PointSet(2, {1}));
}

TEST(OpenClosed, Examples) {
  const auto chain = FunctionalMap::load({0, 0, 1});
  EXPECT_FALSE(is_open(chain, PointSet(3, {0})));
  EXPECT_TRUE(is_closed(chain, PointSet(3, {0})));
  EXPECT_TRUE(is_open(chain, PointSet(3)));
  EXPECT_TRUE(is_closed(chain, PointSet(3)));

  const auto cycle = FunctionalMap::load({1, 2, 0});
  EXPECT_FALSE(is_open(cycle, PointSet(3, {0, 1})));
  EXPECT_FALSE(is_closed(cycle, PointSet(3, {0, 1})));
}

TEST(Closure, Examples) {
  const auto chain = FunctionalMap::load({0, 0, 1});
  EXPECT_EQ(closure(chain, PointSet(3, {2})), PointSet(3, {0, 1, 2}));
  EXPECT_EQ(closure(chain, PointSet(3)), PointSet(3));
  const auto cycle = FunctionalMap::load({1, 2, 0});
  EXPECT_TRUE(closure(cycle, PointSet(3, {1})).is_full());
}

TEST(EnumerateOpens, Counts) {
  EXPECT_EQ(enumerate_opens(FunctionalMap::load({0, 0, 0})).size(), 5u);
  EXPECT_EQ(enumerate_opens(FunctionalMap::load({1, 2, 0})).size(), 2u);
  EXPECT_EQ(enumerate_opens(FunctionalMap::load({0, 1})).size(), 4u);
}

TEST(EnumerateOpens, RespectsCap) {
  const auto f = gen_random(21, 1);
  try {
    enumerate_opens(f);
    FAIL() << "expected DomainTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainTooLarge);
  }
  EXPECT_THROW(enumerate_opens(gen_random(5, 1), 31), Error);
  EXPECT_EQ(enumerate_opens(gen_random(5, 1), 5).n, 5u);
}

TEST(Masks, RoundTrip) {
  const PointSet s(7, {0, 3, 6});
  EXPECT_EQ(set_to_mask(s), 0b1001001u);
  EXPECT_EQ(mask_to_set(7, 0b1001001u), s);
}

TEST(TopologyProperty, CatalogMatchesMinimalOpens) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto f = gen_random(n, seed);
    const auto V = minimal_opens(f);
    const auto catalog = enumerate_opens(f);

    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const PointSet a = catalog.at(i);
      EXPECT_TRUE(is_open(f, a));
      EXPECT_TRUE(is_closed(f, a.complement()));
    }
    // Opens are closed under intersection and union (Alexandroff).
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = 0; j < catalog.size(); ++j) {
        EXPECT_TRUE(catalog.contains(catalog.at(i) & catalog.at(j)));
        EXPECT_TRUE(catalog.contains(catalog.at(i) | catalog.at(j)));
      }
    }

    for (Point x = 0; x < n; ++x) {
      // V[x] is the intersection of every open set around x.
      PointSet meet = PointSet::full(n);
      for (std::size_t i = 0; i < catalog.size(); ++i) {
        const PointSet a = catalog.at(i);
        if (a.contains(x)) meet &= a;
      }
      EXPECT_EQ(V[x], meet) << "seed " << seed << " x " << x;

      // The closure of {x} is the smallest closed set around x, which is
      // also the orbit of x.
      PointSet closed_meet = PointSet::full(n);
      for (std::size_t i = 0; i < catalog.size(); ++i) {
        const PointSet c = catalog.at(i).complement();
        if (c.contains(x)) closed_meet &= c;
      }
      const PointSet cl = closure(f, PointSet::singleton(n, x));
      EXPECT_EQ(cl, closed_meet);
      PointSet orbit(n);
      Point y = x;
      for (std::size_t k = 0; k <= n; ++k, y = f(y)) orbit.insert(y);
      EXPECT_EQ(cl, orbit);

      for (Point y2 = 0; y2 < n; ++y2) {
        const bool nested = V[x].subset_of(V[y2]) || V[y2].subset_of(V[x]);
        EXPECT_TRUE(nested || !V[x].intersects(V[y2]));
      }
    }
  }
}
