#include <gtest/gtest.h>

#include "eca/errors.hpp"
#include "eca/ring.hpp"

using namespace eca;

TEST(Ring, DirectedAndUndirectedDistance) {
  EXPECT_EQ(ddist(8, 2, 10), 4);
  EXPECT_EQ(dist(8, 2, 10), 4);
  EXPECT_EQ(ddist(2, 8, 10), 6);
  for (Index i = 0; i < 10; ++i) EXPECT_EQ(dist(i, i, 10), 0);
}

TEST(Ring, DistanceIsSymmetricAndBounded) {
  for (Index n : {3, 4, 7, 10})
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        EXPECT_EQ(dist(i, j, n), dist(j, i, n));
        EXPECT_LE(2 * dist(i, j, n), n);
        EXPECT_EQ(ddist(i, j, n) + ddist(j, i, n), i == j ? 0 : n);
      }
}

TEST(Ring, DisplacementPrefersShortSide) {
  EXPECT_EQ(displacement(8, 2, 10), 4);
  EXPECT_EQ(displacement(2, 8, 10), -4);
  EXPECT_EQ(displacement(0, 5, 10), 5);
  for (Index n : {5, 8})
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Index d = displacement(i, j, n);
        EXPECT_EQ(wrap(i + d, n), j);
        EXPECT_EQ(d < 0 ? -d : d, dist(i, j, n));
      }
}

TEST(Ring, Descends) {
  EXPECT_TRUE(descends({5, 3}, {2, 5}, 10));
  EXPECT_FALSE(descends({5, 3}, {4, 5}, 10));
  EXPECT_FALSE(descends({5, 3}, {5, 3}, 10));
  EXPECT_TRUE(descends({3, 9}, {1, 1}, 10));  // across the seam
}

TEST(Ring, Neighborhood) {
  EXPECT_EQ(neighborhood(0, 1, 10), (std::vector<Index>{9, 0, 1}));
  EXPECT_EQ(neighborhood(4, 0, 10), (std::vector<Index>{4}));
  EXPECT_EQ(neighborhood(9, 2, 10), (std::vector<Index>{7, 8, 9, 0, 1}));
  EXPECT_THROW(neighborhood(0, 5, 10), InvalidRadius);
}

TEST(Ring, Intervals) {
  EXPECT_EQ(interval_length(8, 1, 10), 4);
  EXPECT_TRUE(in_interval(0, 8, 1, 10));
  EXPECT_FALSE(in_interval(5, 8, 1, 10));
}
