#include <gtest/gtest.h>

#include "persistd/bottleneck.hpp"
#include "persistd/io.hpp"
#include "persistd/pmodule.hpp"
#include "persistd/random.hpp"
#include "support.hpp"

using namespace persistd;
using testing_support::iv;
using testing_support::mod;
using testing_support::q;

namespace {

std::size_t rank_at(const PModule& m, const Rational& x) {
  std::size_t r = 0;
  for (const auto& s : m.summands()) {
    if (s.interval.contains(x)) r += s.multiplicity;
  }
  return r;
}

std::vector<Rational> eighths(int lo, int hi) {
  std::vector<Rational> out;
  for (int k = 8 * lo; k <= 8 * hi; ++k) out.emplace_back(k, 8);
  return out;
}

GridOptions coarse_grid() {
  GridOptions g;
  g.max_denominator = 2;
  g.lo = -3;
  g.hi = 3;
  g.max_summands = 4;
  return g;
}

}  // namespace

TEST(PModule, CanonicalFormIsIsomorphism) {
  EXPECT_EQ(mod({"[3,4]", "[0,1)", "[0,1)"}), mod({"[0,1)", "[3,4]", "[0,1)"}));
  const PModule m = mod({"[0,1)", "[0,1)"});
  ASSERT_EQ(m.summands().size(), 1u);
  EXPECT_EQ(m.summands()[0].multiplicity, 2u);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_NE(mod({"[0,1)"}), mod({"[0,1]"}));
  EXPECT_THROW(PModule(std::vector<Interval>{Interval::empty()}), DomainError);
  EXPECT_THROW(PModule(std::vector<Summand>{{iv("[0,1)"), 0}}), DomainError);
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(mod({"[0,1)"}), mod({"[0,1)"})), mod({"[0,1)", "[0,1)"}));
  EXPECT_EQ(direct_sum(mod({"[0,2)"}), PModule()), mod({"[0,2)"}));
  EXPECT_EQ(direct_sum(mod({"[0,2)"}), mod({"[3,4]"})).expanded(),
            (std::vector<Interval>{iv("[0,2)"), iv("[3,4]")}));
}

TEST(Classify, Examples) {
  EXPECT_FALSE(classify(mod({"[0,inf)"})).in_ffid);
  EXPECT_TRUE(classify(mod({"[0,inf)"})).in_fid);
  const auto cd = classify(mod({"[1,2]"}), Bounds{1, 2});
  EXPECT_TRUE(cd.in_ffid_cd.value());
  EXPECT_FALSE(classify(mod({"[1,3)"}), Bounds{1, 2}).in_ffid_cd.value());
  EXPECT_FALSE(classify(mod({"[1,2]"})).in_ffid_cd.has_value());
  EXPECT_TRUE(classify(mod({"[0,0]", "[5,5]"})).is_ephemeral);
  EXPECT_FALSE(classify(mod({"[0,0]", "[5,6)"})).is_ephemeral);
  const auto zero = classify(PModule(), Bounds{0, 1});
  EXPECT_TRUE(zero.is_zero && zero.is_ephemeral && zero.in_ffid && zero.in_ffid_cd.value());
  EXPECT_THROW(classify(PModule(), Bounds{1, 1}), DomainError);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(mod({"[2,5)"})), mod({"(2,5)"}));
  EXPECT_TRUE(radical(mod({"[4,4]"})).is_zero());
  EXPECT_EQ(radical(mod({"(0,3)"})), mod({"(0,3)"}));
  EXPECT_EQ(radical(mod({"(-inf,1]", "[0,1]", "[0,1]"})), mod({"(-inf,1]", "(0,1]", "(0,1]"}));
}

// (rad M)(x) is the sum over c < x of the images of M(c < x).
TEST(Radical, MatchesPointwiseOracle) {
  Rng rng{31};
  const auto g = coarse_grid();
  for (int trial = 0; trial < 500; ++trial) {
    const PModule m = random_module(rng, g);
    const PModule r = radical(m);
    for (const auto& x : eighths(-4, 4)) {
      std::size_t expected = 0;
      for (const auto& s : m.summands()) {
        const bool reached = s.interval.contains(x) && s.interval.contains(x - q(1, 1024));
        if (reached) expected += s.multiplicity;
      }
      ASSERT_EQ(rank_at(r, x), expected) << serialize_module(m) << " at " << to_string(x);
    }
    ASSERT_EQ(radical(r), r);
    ASSERT_EQ(module_distance(m, r), Distance::zero());
  }
}

TEST(PersistentSubmodule, Examples) {
  EXPECT_EQ(persistent_submodule(mod({"[1,4)"}), 2), mod({"[3,4)"}));
  EXPECT_TRUE(persistent_submodule(mod({"[1,4)"}), 3).is_zero());
  EXPECT_EQ(persistent_submodule(mod({"[0,2]"}), 2), mod({"[2,2]"}));
  const PModule m = mod({"[0,1)", "(2,inf)", "[5,5]"});
  EXPECT_EQ(persistent_submodule(m, 0), m);
  EXPECT_THROW(persistent_submodule(m, -1), DomainError);
}

// The image of M(x - p <= x), computed pointwise.
TEST(PersistentSubmodule, MatchesPointwiseOracle) {
  Rng rng{37};
  const auto g = coarse_grid();
  for (int trial = 0; trial < 500; ++trial) {
    const PModule m = random_module(rng, g);
    const Rational p(rng.uniform(0, 8), 4);
    const PModule mp = persistent_submodule(m, p);
    for (const auto& x : eighths(-6, 6)) {
      std::size_t expected = 0;
      for (const auto& s : m.summands()) {
        if (s.interval.contains(x) && s.interval.contains(x - p)) expected += s.multiplicity;
      }
      ASSERT_EQ(rank_at(mp, x), expected);
    }
    ASSERT_LE(module_distance(m, mp), Distance(p));
  }
}

TEST(ContractionPath, Examples) {
  const PModule m = mod({"[0,2)"});
  EXPECT_EQ(contraction_path(m, q(1, 2)), mod({"[1/2,3/2)"}));
  EXPECT_EQ(contraction_path(m, 0), m);
  EXPECT_TRUE(contraction_path(m, 1).is_zero());
  EXPECT_EQ(contraction_path(mod({"(0,2]", "[3,3]"}), q(1, 2)), mod({"[1/2,3/2)"}));
  EXPECT_THROW(contraction_path(mod({"[0,inf)"}), q(1, 2)), DomainError);
  EXPECT_THROW(contraction_path(m, q(3, 2)), DomainError);
  EXPECT_THROW(contraction_path(m, q(-1, 2)), DomainError);
}

TEST(ContractionPath, Lipschitz) {
  Rng rng{41};
  auto g = coarse_grid();
  g.allow_infinite = false;
  for (int trial = 0; trial < 400; ++trial) {
    const PModule m = random_module(rng, g);
    Rational s(rng.uniform(0, 16), 16);
    Rational t(rng.uniform(0, 16), 16);
    if (t < s) std::swap(s, t);
    Distance widest = Distance::zero();
    for (const auto& summand : m.summands()) widest = max(widest, distance_to_zero(summand.interval));
    const Distance d = module_distance(contraction_path(m, s), contraction_path(m, t));
    ASSERT_LE(d, Rational(t - s) * widest) << serialize_module(m);
  }
}

TEST(NonT0, SingletonIsInvisible) {
  Rng rng{43};
  const auto g = coarse_grid();
  for (int trial = 0; trial < 300; ++trial) {
    const PModule m = random_module(rng, g);
    const Rational r = random_rational(rng, g);
    const PModule n = direct_sum(m, PModule(std::vector<Interval>{singleton(r)}));
    ASSERT_NE(m, n);
    ASSERT_EQ(module_distance(m, n), Distance::zero());
  }
}
