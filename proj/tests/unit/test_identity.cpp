#include <gtest/gtest.h>

#include "vicsek/errors.hpp"
#include "vicsek/identity.hpp"
#include "vicsek/recurrence.hpp"

using namespace vicsek;

TEST(Identity, LevelZero) { EXPECT_EQ(identity(0), SandpileConfig({2, 2, 2})); }

TEST(Identity, LevelOne) {
  const auto g = build(1);
  const auto id = identity(1);
  for (std::size_t i = 0; i < id.size(); ++i) {
    const Coord c = g.coord(static_cast<VertexId>(i));
    EXPECT_EQ(id[i], g.degree(static_cast<VertexId>(i)) == 6 ? 5 : 2) << c;
  }
  EXPECT_TRUE(is_recurrent(g, id));
}

TEST(Identity, MatchesPowerOracle) {
  for (int n = 0; n <= 3; ++n) {
    const auto g = build(n);
    RandomStream rng(90, static_cast<std::uint64_t>(n));
    const auto id = identity(n);
    EXPECT_EQ(identity_from_power(g, max_stable_config(g)), id) << "level " << n;
    EXPECT_EQ(identity_from_power(g, sample_recurrent(g, rng)), id) << "level " << n;
  }
}

TEST(Identity, HeightsAtCutpoints) {
  const auto g = build(2);
  const auto h = height_histogram(identity(2));
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.at(5), 20u);  // four inner cutpoints in each level-1 block
  EXPECT_EQ(h.at(4), 4u);
  EXPECT_EQ(h.at(2), 75u - 24u);
  (void)g;
}

TEST(Identity, SelfSimilar) {
  // The lower-left block of id_n is id_(n-1) away from its corner cutpoint.
  for (int n = 2; n <= 3; ++n) {
    const auto big = build(n), small = build(n - 1);
    const auto id = identity(n), sub = identity(n - 1);
    for (VertexId v = 0; v < static_cast<VertexId>(small.site_count()); ++v)
      EXPECT_EQ(id[static_cast<std::size_t>(big.index_of(small.coord(v)))], sub[static_cast<std::size_t>(v)]);
  }
}

TEST(Identity, Verify) {
  for (int n = 0; n <= 2; ++n) {
    const auto g = build(n);
    const auto report = verify_identity(g, identity(n), 30, 5);
    EXPECT_EQ(report.samples, 30u);
    EXPECT_EQ(report.sink_particles % 4, 2);
  }
}

TEST(Identity, MaxStableIsTheIdentityOnLevelOne) {
  EXPECT_EQ(identity(1), max_stable_config(build(1)));
}

TEST(Identity, VerifyRejects) {
  const auto g = build(2);
  try {
    verify_identity(g, max_stable_config(g), 5, 1);
    FAIL() << "max stable configuration accepted as identity";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.clause(), "b");
  }
  try {
    verify_identity(g, constant_config(g, 0), 5, 1);
    FAIL();
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.clause(), "a");
  }
}

TEST(Identity, MergeErrors) {
  const auto k = identity(0);
  EXPECT_THROW(merge({0, 2, k, k, k, k, k}), DomainError);
  EXPECT_THROW(merge({1, -1, k, k, k, k, k}), DomainError);
  EXPECT_THROW(merge({2, 2, k, k, k, k, k}), DomainError);
  EXPECT_THROW(identity(-1), DomainError);
}

TEST(Identity, MergeCutpoints) {
  const auto g = build(1);
  const SandpileConfig m({1, 0, 2});
  const SandpileConfig rt({2, 1, 0});
  const SandpileConfig k({2, 2, 2});
  const auto c = merge({1, 3, k, k, rt, k, m});
  EXPECT_EQ(c[static_cast<std::size_t>(g.index_of({1, 1}))], 3 + 1);  // eta_M at (0,0)
  EXPECT_EQ(c[static_cast<std::size_t>(g.index_of({1, 2}))], 3 + 0);  // eta_M at (0,1)
  EXPECT_EQ(c[static_cast<std::size_t>(g.index_of({2, 1}))], 3 + 2);  // eta_M at (1,0)
  EXPECT_EQ(c[static_cast<std::size_t>(g.index_of({2, 2}))], 3 + 2);  // eta_RT at (0,0)
  EXPECT_EQ(c[static_cast<std::size_t>(g.index_of({3, 2}))], 0);      // RT copy at (1,0)
}

TEST(Identity, Histogram) {
  const auto h = height_histogram(SandpileConfig({2, 2, 5, 4}));
  EXPECT_EQ(h.at(2), 2u);
  EXPECT_EQ(h.at(4), 1u);
  EXPECT_EQ(h.at(5), 1u);
}
