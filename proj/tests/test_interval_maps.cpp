#include <gtest/gtest.h>

#include <vector>

#include "persistd/interval_maps.hpp"
#include "support.hpp"

using namespace persistd;
using testing_support::iv;

namespace {

// Brute-force existence of a nonzero natural map I -> J restricted to a
// finite sample of the line. Each component is a scalar; the naturality
// squares only force equalities f_x = f_y or zeros, so 0/1 choices suffice.
bool naturality_oracle(const Interval& from, const Interval& to, const std::vector<Rational>& pts) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (from.contains(pts[k]) && to.contains(pts[k])) support.push_back(k);
  }
  const std::size_t n = support.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> f(pts.size(), 0);
    for (std::size_t b = 0; b < n; ++b) f[support[b]] = (mask >> b) & 1;
    bool natural = true;
    for (std::size_t x = 0; x < pts.size() && natural; ++x) {
      for (std::size_t y = x; y < pts.size() && natural; ++y) {
        const int j_xy = to.contains(pts[x]) && to.contains(pts[y]);
        const int i_xy = from.contains(pts[x]) && from.contains(pts[y]);
        natural = j_xy * f[x] == f[y] * i_xy;
      }
    }
    if (natural) return true;
  }
  return false;
}

}  // namespace

TEST(HasNonzeroMap, Examples) {
  EXPECT_FALSE(has_nonzero_map(iv("[0,2]"), iv("(0,2)")));
  EXPECT_FALSE(has_nonzero_map(iv("(0,2)"), iv("[0,2]")));
  EXPECT_TRUE(has_nonzero_map(iv("[0,1)"), iv("[0,1)")));
  EXPECT_THROW(has_nonzero_map(Interval::empty(), iv("[0,1)")), DomainError);
}

// [a,b) -> [c,d) is nonzero exactly when c <= a < d <= b.
TEST(HasNonzeroMap, HalfOpenFamily) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        for (int d = c + 1; d <= 4; ++d) {
          const bool expected = c <= a && a < d && d <= b;
          EXPECT_EQ(has_nonzero_map(closed_open(a, b), closed_open(c, d)), expected)
              << a << " " << b << " " << c << " " << d;
        }
      }
    }
  }
}

TEST(HasNonzeroMap, MatchesNaturalityOracle) {
  std::vector<Rational> pts;
  for (int k = -1; k <= 7; ++k) pts.emplace_back(k, 2);
  std::vector<Interval> grid;
  for (int lo = 0; lo <= 3; ++lo) {
    for (int hi = lo; hi <= 3; ++hi) {
      for (bool lc : {true, false}) {
        for (bool hc : {true, false}) {
          Interval i = make_interval(Endpoint{ExtRational(lo), lc}, Endpoint{ExtRational(hi), hc});
          if (!i.is_empty()) grid.push_back(i);
        }
      }
    }
  }
  for (const auto& i : grid) {
    for (const auto& j : grid) {
      ASSERT_EQ(has_nonzero_map(i, j), naturality_oracle(i, j, pts)) << to_string(i) << " -> " << to_string(j);
    }
  }
}

TEST(CanonicalMapParts, Examples) {
  const auto a = canonical_map_parts(iv("[0,5)"), iv("[-2,3)"));
  EXPECT_EQ(a.image, iv("[0,3)"));
  EXPECT_EQ(a.kernel, iv("[3,5)"));
  EXPECT_EQ(a.cokernel, iv("[-2,0)"));

  const auto b = canonical_map_parts(iv("[0,1)"), iv("[0,1)"));
  EXPECT_EQ(b.image, iv("[0,1)"));
  EXPECT_TRUE(b.kernel.is_empty());
  EXPECT_TRUE(b.cokernel.is_empty());

  const auto c = canonical_map_parts(iv("[1,4)"), iv("[0,1]"));
  EXPECT_EQ(c.image, iv("[1,1]"));
  EXPECT_EQ(c.kernel, iv("(1,4)"));
  EXPECT_EQ(c.cokernel, iv("[0,1)"));

  EXPECT_THROW(canonical_map_parts(iv("[0,2]"), iv("(0,2)")), NoNonzeroMapError);
}

TEST(CanonicalMapParts, PartsTileTheIntervals) {
  const auto grid = testing_support::half_grid(2);
  int maps = 0;
  for (const auto& i : grid) {
    for (const auto& j : grid) {
      if (!has_nonzero_map(i, j)) continue;
      ++maps;
      const auto p = canonical_map_parts(i, j);
      ASSERT_EQ(p.image, intersect(i, j));
      ASSERT_TRUE(strictly_precedes(p.cokernel, p.image));
      ASSERT_TRUE(strictly_precedes(p.image, p.kernel));
      for (int k = -2; k <= 10; ++k) {
        const Rational x(k, 2);
        ASSERT_EQ(i.contains(x), p.image.contains(x) || p.kernel.contains(x));
        ASSERT_EQ(j.contains(x), p.image.contains(x) || p.cokernel.contains(x));
        ASSERT_FALSE(p.image.contains(x) && p.kernel.contains(x));
        ASSERT_FALSE(p.image.contains(x) && p.cokernel.contains(x));
      }
    }
    ASSERT_TRUE(has_nonzero_map(i, i));
  }
  EXPECT_GT(maps, 100);
}
