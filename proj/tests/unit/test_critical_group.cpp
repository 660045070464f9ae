#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "vicsek/chain.hpp"
#include "vicsek/critical_group.hpp"
#include "vicsek/errors.hpp"
#include "vicsek/identity.hpp"
#include "vicsek/recurrence.hpp"

using namespace vicsek;

namespace {

InvariantFactors repeat(std::initializer_list<std::pair<long, std::size_t>> blocks) {
  InvariantFactors f;
  for (auto [value, count] : blocks) f.insert(f.end(), count, BigInt(value));
  return f;
}

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST(CriticalGroup, ReducedLaplacianK4) {
  EXPECT_EQ(reduced_laplacian(build(0)), from_rows({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}));
}

TEST(CriticalGroup, ReducedLaplacianShape) {
  const auto g = build(1);
  const auto l = reduced_laplacian(g);
  ASSERT_EQ(l.rows(), 15u);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    BigInt row;
    for (std::size_t j = 0; j < l.cols(); ++j) {
      EXPECT_EQ(l(i, j), l(j, i));
      if (i != j) {
        EXPECT_TRUE(l(i, j) == 0 || l(i, j) == -1);
      }
      row += l(i, j);
    }
    EXPECT_EQ(l(i, i), g.degree(static_cast<VertexId>(i)));
    EXPECT_TRUE(row >= 0 && row <= 3);
  }
}

TEST(CriticalGroup, SmallSmithForms) {
  EXPECT_EQ(smith_normal_form(from_rows({{2, 0}, {0, 6}})), repeat({{2, 1}, {6, 1}}));
  EXPECT_EQ(smith_normal_form(from_rows({{6, 0}, {0, 4}})), repeat({{2, 1}, {12, 1}}));
  EXPECT_EQ(smith_normal_form(from_rows({{-3}})), repeat({{3, 1}}));
  EXPECT_THROW(smith_normal_form(from_rows({{1, 2}, {2, 4}})), SingularError);
  EXPECT_THROW(smith_normal_form(IntegerMatrix(2, 3)), DomainError);
}

TEST(CriticalGroup, RandomMatricesAgainstDeterminant) {
  RandomStream rng(31);
  int checked = 0;
  while (checked < 50) {
    const std::size_t n = 2 + rng.uniform_below(5);
    IntegerMatrix m(n, n);
    std::vector<std::vector<mpz_class>> dense(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = static_cast<long>(rng.uniform_below(21)) - 10;
        m(i, j) = v;
        dense[i][j] = v;
      }
    const mpz_class det = oracle::determinant(dense);
    if (det == 0) continue;
    const auto f = smith_normal_form(m);
    ASSERT_EQ(f.size(), n);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      EXPECT_GT(f[i], 0);
      EXPECT_EQ(f[i + 1] % f[i], 0);
    }
    EXPECT_EQ(group_order(f), abs(det));
    ++checked;
  }
}

TEST(CriticalGroup, VicsekLevels) {
  EXPECT_EQ(group_structure(0), repeat({{1, 1}, {4, 2}}));
  EXPECT_EQ(group_structure(1), repeat({{1, 5}, {4, 10}}));
  EXPECT_EQ(group_structure(2), repeat({{1, 25}, {4, 50}}));
  for (int n = 0; n <= 2; ++n) {
    BigInt trees = 1;
    for (long i = 0; i < static_cast<long>(std::pow(5, n)); ++i) trees *= 16;
    EXPECT_EQ(group_order(group_structure(n)), trees);
  }
}

TEST(CriticalGroup, TreeCountMatchesDeterminant) {
  const auto l = reduced_laplacian(build(1));
  std::vector<std::vector<mpz_class>> dense(l.rows(), std::vector<mpz_class>(l.cols()));
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) dense[i][j] = l(i, j);
  EXPECT_EQ(oracle::determinant(dense), group_order(group_structure(1)));
}

TEST(CriticalGroup, OrderTwoCounts) {
  EXPECT_EQ(order2_count(0), 4);
  EXPECT_EQ(order2_count(1), 1024);
  BigInt prev = order2_count(0);
  for (int n = 1; n <= 2; ++n) {
    const BigInt now = order2_count(n);
    BigInt bound = 1;
    for (int i = 0; i < 5; ++i) bound *= prev;
    EXPECT_LE(now, bound);
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 2 * static_cast<unsigned long>(std::pow(5, n)));
    EXPECT_EQ(now, expected);
    prev = now;
  }
}

TEST(CriticalGroup, OrderTwoElementsOnK4) {
  // Brute force over the 16 recurrent configurations.
  const auto g = build(0);
  const auto id = identity(0);
  int count = 0;
  for (const auto& eta : enumerate_recurrent_k4()) count += element_order(g, eta, id) <= 2;
  EXPECT_EQ(count, 4);
}

TEST(CriticalGroup, ElementOrdersDivideFour) {
  for (int n : {1, 2}) {
    const auto g = build(n);
    const auto id = identity(n);
    EXPECT_EQ(element_order(g, id, id), 1u);
    RandomStream rng(60, static_cast<std::uint64_t>(n));
    std::uint64_t largest = 1;
    for (int i = 0; i < 200; ++i) {
      const auto k = element_order(g, sample_recurrent(g, rng), id);
      EXPECT_TRUE(k == 1 || k == 2 || k == 4) << k;
      largest = std::max(largest, k);
    }
    EXPECT_EQ(largest, 4u);
  }
  const auto g = build(1);
  EXPECT_THROW(element_order(g, constant_config(g, 0), identity(1)), DomainError);
}

TEST(CriticalGroup, FourParticlesAlwaysReachTheSink) {
  for (int n : {1, 2}) {
    const auto g = build(n);
    for (Coord x : {Coord{0, 0}, Coord{1, 0}, Coord{0, 3}}) {
      const auto r = sink_hit_probability(g, x, 4, 500, 8);
      EXPECT_EQ(r.hits, r.samples);
      EXPECT_EQ(r.estimate, 1.0);
    }
  }
}

TEST(CriticalGroup, DoublingInequality) {
  const auto g = build(2);
  for (Coord x : {Coord{0, 0}, Coord{4, 5}, Coord{2, 0}}) {
    const auto one = sink_hit_probability(g, x, 1, 4000, 21);
    const auto two = sink_hit_probability(g, x, 2, 4000, 22);
    const double joint = std::sqrt(two.std_error * two.std_error + 4 * one.std_error * one.std_error);
    EXPECT_LE(two.estimate, 2 * one.estimate + 3 * joint) << x;
  }
}

TEST(CriticalGroup, SinkHitAtOriginMatchesChain) {
  // On V_1 a particle at o reaches the sink unless the chain hits 0 within
  // three steps; the off-diagonal branches cannot absorb it.
  const auto g = build(1);
  const auto r = sink_hit_probability(g, {0, 0}, 1, 20000, 23);
  const double p_zero = k_step_distribution(1, 3)[0].get_d();
  EXPECT_NEAR(r.estimate, 1 - p_zero, 3 * r.std_error + 1e-9);
}
