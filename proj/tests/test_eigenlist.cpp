#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <vector>

#include "majorant/eigenlist.hpp"
#include "majorant/errors.hpp"
#include "majorant/random.hpp"
#include "oracles.hpp"

using namespace majorant;

namespace {
std::vector<double> vec(const EigenList& l) { return {l.values().begin(), l.values().end()}; }
}  // namespace

TEST(NormalizeList, SortsDecreasing) {
  EXPECT_EQ(vec(normalize_list(std::vector<double>{1, 3, 2})), (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(vec(normalize_list(std::vector<double>{5})), (std::vector<double>{5}));
  EXPECT_EQ(vec(normalize_list(std::vector<double>{0.5, 0.5, 0.5})), (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(NormalizeList, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(normalize_list(std::vector<double>{}), InvalidInput);
  EXPECT_THROW(normalize_list(std::vector<double>{1.0, std::nan("")}), InvalidInput);
  EXPECT_THROW(normalize_list(std::vector<double>{std::numeric_limits<double>::infinity()}), InvalidInput);
}

TEST(EigenListType, EnforcesMonotonicityWithinTolerance) {
  EXPECT_THROW(EigenList({1.0, 2.0}), InvalidInput);
  EXPECT_NO_THROW(EigenList({1.0, 1.0 + 1e-13}));
  EXPECT_THROW(EigenList({1.0, 1.0 + 1e-6}), InvalidInput);
  EXPECT_NO_THROW(EigenList({1.0, 1.0 + 1e-6}, 1e-5));
  EXPECT_THROW(EigenList(std::vector<double>{}), InvalidInput);
}

TEST(CheckMajorization, EqualityExample) {
  const auto report = check_majorization(EigenList({2, 2}), EigenList({3, 1}), MajorizationMode::equality);
  EXPECT_TRUE(report.holds);
  EXPECT_FALSE(report.first_violation.has_value());
  EXPECT_EQ(report.slack, (std::vector<double>{1, 0}));
  EXPECT_EQ(report.trace_gap, 0.0);
}

TEST(CheckMajorization, IdentityHolds) {
  EXPECT_TRUE(check_majorization(EigenList({1, 1, 1}), EigenList({1, 1, 1}), MajorizationMode::equality).holds);
}

TEST(CheckMajorization, DominanceViolationAtFirstPrefix) {
  const auto report = check_majorization(EigenList({3, 1}), EigenList({2, 2}), MajorizationMode::dominance);
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.first_violation.has_value());
  EXPECT_EQ(*report.first_violation, 1u);
}

TEST(CheckMajorization, EqualityModeRejectsTraceGap) {
  const EigenList p({1.0, 0.5});
  const EigenList lambda({2.0, 1.0});
  EXPECT_TRUE(check_majorization(p, lambda, MajorizationMode::dominance).holds);
  const auto eq = check_majorization(p, lambda, MajorizationMode::equality);
  EXPECT_FALSE(eq.holds);
  EXPECT_EQ(*eq.first_violation, 2u);
  EXPECT_DOUBLE_EQ(eq.trace_gap, 1.5);
}

TEST(CheckMajorization, PadsShorterListWithZeros) {
  const auto report = check_majorization(EigenList({0.5, 0.25, 0.25}), EigenList({1.0}), MajorizationMode::equality);
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.slack.size(), 3u);
}

TEST(CheckMajorization, ToleranceIsAbsolute) {
  const EigenList p({1.0 + 5e-13, 0.0});
  const EigenList lambda({1.0, 5e-13});
  EXPECT_TRUE(check_majorization(p, lambda, MajorizationMode::equality, 1e-12).holds);
  EXPECT_FALSE(check_majorization(p, lambda, MajorizationMode::equality, 1e-13).holds);
}

TEST(ReduceToEquality, ConvexCombinationExample) {
  // x = (1, 0), y = (3, 2), s = (2 - 1) / (5 - 1) = 1/4.
  const auto mu = reduce_to_equality(EigenList({1, 1}), EigenList({3, 2}));
  EXPECT_DOUBLE_EQ(mu[0], 1.5);
  EXPECT_DOUBLE_EQ(mu[1], 0.5);
}

TEST(ReduceToEquality, FeasiblePolytopeOracle) {
  // p = (2, 1), lambda = (3, 1): enumerate the feasible polytope on a 1/4 grid.
  const std::vector<double> p{2, 1}, lambda{3, 1};
  std::vector<std::vector<double>> feasible;
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      const std::vector<double> mu{a / 4.0, b / 4.0};
      if (oracle::reduction_constraints_hold(p, lambda, mu, 0.0, 0.0)) feasible.push_back(mu);
    }
  EXPECT_NE(std::find(feasible.begin(), feasible.end(), std::vector<double>{2, 1}), feasible.end());
  EXPECT_NE(std::find(feasible.begin(), feasible.end(), std::vector<double>{2.5, 0.5}), feasible.end());

  // The inductive construction: x = (2, 0), y = (3, 1), s = 1/2.
  const auto mu = reduce_to_equality(EigenList(p), EigenList(lambda));
  EXPECT_DOUBLE_EQ(mu[0], 2.5);
  EXPECT_DOUBLE_EQ(mu[1], 0.5);
  EXPECT_TRUE(oracle::reduction_constraints_hold(p, lambda, vec(mu), 0.0, 0.0));
}

TEST(ReduceToEquality, EqualListsAreFixed) {
  const EigenList lambda({0.9, 0.4, 0.4, 0.1});
  EXPECT_EQ(vec(reduce_to_equality(lambda, lambda)), vec(lambda));
  const EigenList with_zero({2.0, 0.0});
  EXPECT_EQ(vec(reduce_to_equality(with_zero, with_zero)), vec(with_zero));
}

TEST(ReduceToEquality, Errors) {
  EXPECT_THROW(reduce_to_equality(EigenList({3, 1}), EigenList({2, 2})), MajorizationViolation);
  EXPECT_THROW(reduce_to_equality(EigenList({1, -1}), EigenList({2, 2})), InvalidInput);
}

TEST(ReduceToEquality, LengthFollowsP) {
  const auto mu = reduce_to_equality(EigenList({0.5, 0.25}), EigenList({1.0, 0.5, 0.5}));
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_TRUE(oracle::reduction_constraints_hold({0.5, 0.25}, {1.0, 0.5, 0.5}, vec(mu), 1e-15, 1e-15));
}

TEST(ReduceToEquality, RandomDominancePairsSatisfyConstraints) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = random_dominance_pair(1 + rng.index(15), rng);
    const auto mu = reduce_to_equality(pair.p, pair.lambda);
    EXPECT_TRUE(oracle::reduction_constraints_hold(vec(pair.p), vec(pair.lambda), vec(mu), 1e-12, 1e-11));
    // mu majorizes p with equality of totals
    EXPECT_TRUE(check_majorization(pair.p, mu, MajorizationMode::equality, 1e-11).holds);
  }
}

TEST(HlpConvexCheck, Examples) {
  const std::vector<ConvexFunction> sq{square_function()};
  EXPECT_TRUE(hlp_convex_check(EigenList({2, 2}), EigenList({3, 1}), sq));
  EXPECT_TRUE(hlp_convex_check(EigenList({1, 1}), EigenList({1, 1}), sq));
  EXPECT_FALSE(hlp_convex_check(EigenList({3, 1}), EigenList({2, 2}), sq));
}

TEST(HlpConvexCheck, Errors) {
  const std::vector<ConvexFunction> sq{square_function()};
  EXPECT_THROW(hlp_convex_check(EigenList({2, 1}), EigenList({3, 1}), sq), TraceMismatch);
  EXPECT_THROW(hlp_convex_check(EigenList({1}), EigenList({1}), std::vector<ConvexFunction>{}), InvalidInput);
}

TEST(HlpConvexCheck, AgreesWithPrefixSumsOnIntegerLists) {
  // Integer entries make every comparison exact, so borderline pairs are common
  // and decided without round-off.
  Rng rng(99);
  int agreed_true = 0;
  int agreed_false = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.index(7);
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = static_cast<double>(rng.index(6));
    for (auto& v : b) v = static_cast<double>(rng.index(6));
    const double diff = std::accumulate(a.begin(), a.end(), 0.0) - std::accumulate(b.begin(), b.end(), 0.0);
    b[0] += diff;  // equal sums
    const auto p = normalize_list(a);
    const auto lambda = normalize_list(b);
    const bool prefix = check_majorization(p, lambda, MajorizationMode::equality).holds;
    const bool hlp = hlp_convex_check(p, lambda, hinge_family(p, lambda));
    ASSERT_EQ(prefix, hlp);
    ASSERT_EQ(prefix, oracle::majorized(vec(p), vec(lambda), 1e-12));
    (prefix ? agreed_true : agreed_false)++;
  }
  EXPECT_GT(agreed_true, 100);
  EXPECT_GT(agreed_false, 100);
}

TEST(SchurDirection, DiagonalIsMajorizedBySpectrum) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_hermitian(1 + rng.index(20), rng);
    const auto report = check_majorization(normalize_list(a.diagonal_values()), EigenList(eigenvalues_desc(a)),
                                           MajorizationMode::equality, 1e-9);
    EXPECT_TRUE(report.holds);
  }
}
