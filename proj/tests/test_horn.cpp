#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "majorant/errors.hpp"
#include "majorant/horn.hpp"
#include "majorant/random.hpp"
#include "oracles.hpp"

using namespace majorant;

namespace {

std::vector<double> run_chain(const EigenList& lambda, const std::vector<TTransform>& chain) {
  std::vector<double> x(lambda.values().begin(), lambda.values().end());
  for (const auto& tau : chain) x = apply_t_transform(x, tau);
  return x;
}

std::vector<double> vec(const EigenList& l) { return {l.values().begin(), l.values().end()}; }

}  // namespace

TEST(TTransformChain, ThreeByThreeExample) {
  const EigenList lambda({2, 1, 0});
  const EigenList p({1, 1, 1});
  const auto chain = t_transform_chain(lambda, p);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].i, 0u);
  EXPECT_EQ(chain[0].j, 2u);
  EXPECT_DOUBLE_EQ(chain[0].t, 0.5);
  EXPECT_LE(oracle::max_abs_diff(run_chain(lambda, chain), vec(p)), 1e-10);
}

TEST(TTransformChain, TwoByTwoExample) {
  const auto chain = t_transform_chain(EigenList({1, 0}), EigenList({0.7, 0.3}));
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].i, 0u);
  EXPECT_EQ(chain[0].j, 1u);
  EXPECT_NEAR(chain[0].t, 0.7, 1e-15);
}

TEST(TTransformChain, IdentityIsEmpty) {
  const EigenList lambda({3, 1, 1, -2});
  EXPECT_TRUE(t_transform_chain(lambda, lambda).empty());
}

TEST(TTransformChain, RejectsNonMajorizedAndLengthMismatch) {
  EXPECT_THROW(t_transform_chain(EigenList({2, 2}), EigenList({3, 1})), MajorizationViolation);
  EXPECT_THROW(t_transform_chain(EigenList({2, 1}), EigenList({1, 1})), MajorizationViolation);
  EXPECT_THROW(t_transform_chain(EigenList({2, 1, 0}), EigenList({1.5, 1.5})), InvalidInput);
}

TEST(TTransformChain, RandomChainsReachTargetWithinNMinusOneSteps) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(30);
    const auto pair = random_majorizing_pair(n, rng);
    const auto chain = t_transform_chain(pair.lambda, pair.p);
    EXPECT_LE(chain.size() + 1, std::max<std::size_t>(n, 1));
    EXPECT_LE(oracle::max_abs_diff(run_chain(pair.lambda, chain), vec(pair.p)), 1e-10);
    for (const auto& tau : chain) {
      EXPECT_LT(tau.i, tau.j);
      EXPECT_GE(tau.t, 0.0);
      EXPECT_LE(tau.t, 1.0);
    }
  }
}

TEST(TTransformValidate, RejectsBadIndicesAndWeights) {
  EXPECT_THROW((TTransform{1, 1, 0.5}).validate(3), InvalidInput);
  EXPECT_THROW((TTransform{2, 1, 0.5}).validate(3), InvalidInput);
  EXPECT_THROW((TTransform{0, 3, 0.5}).validate(3), InvalidInput);
  EXPECT_THROW((TTransform{0, 1, 1.5}).validate(3), InvalidInput);
  EXPECT_NO_THROW((TTransform{0, 2, 0.0}).validate(3));
}

TEST(ApplyTTransform, DiagonalTwoByTwoExample) {
  const auto step = apply_t_transform(HermitianMatrix::diagonal(std::vector<double>{1, 0}), TTransform{0, 1, 0.5});
  const auto& r = step.result.entries();
  EXPECT_NEAR(std::abs(r(0, 0) - Complex(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r(0, 1) - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r(1, 0) - Complex(-0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r(1, 1) - Complex(0.5)), 0.0, 1e-15);
  EXPECT_LE(unitarity_defect(step.unitary), 1e-12);
}

TEST(ApplyTTransform, FullWeightIsIdentity) {
  Rng rng(3);
  const auto a = random_hermitian(4, rng);
  const auto step = apply_t_transform(a, TTransform{1, 3, 1.0});
  EXPECT_EQ(step.unitary, ComplexMatrix::Identity(4, 4));
  EXPECT_EQ(step.result.entries(), a.entries());
}

TEST(ApplyTTransform, ZeroWeightSwapsDiagonalEntries) {
  Rng rng(4);
  const auto a = random_hermitian(5, rng);
  const auto before = a.diagonal_values();
  const auto after = apply_t_transform(a, TTransform{0, 4, 0.0}).result.diagonal_values();
  EXPECT_NEAR(after[0], before[4], 1e-12);
  EXPECT_NEAR(after[4], before[0], 1e-12);
  EXPECT_NEAR(after[2], before[2], 1e-15);
}

TEST(ApplyTTransform, RandomStepsMoveDiagonalAndKeepSpectrum) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(8);
    const auto a = random_hermitian(n, rng);
    const std::size_t i = rng.index(n - 1);
    const std::size_t j = i + 1 + rng.index(n - 1 - i);
    const TTransform tau{i, j, rng.uniform()};
    const auto step = apply_t_transform(a, tau);

    EXPECT_LE(unitarity_defect(step.unitary), 1e-12);
    for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(n); ++r)
      for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(n); ++c) {
        const bool inside = (r == Eigen::Index(i) || r == Eigen::Index(j)) && (c == Eigen::Index(i) || c == Eigen::Index(j));
        if (!inside) EXPECT_EQ(step.unitary(r, c), r == c ? Complex(1.0) : Complex(0.0));
      }
    const auto expected = apply_t_transform(a.diagonal_values(), tau);
    EXPECT_LE(oracle::max_abs_diff(step.result.diagonal_values(), expected), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(oracle::hermitian_eigenvalues(step.result.entries()),
                                   oracle::hermitian_eigenvalues(a.entries())),
              1e-10);
  }
}

TEST(RotationBlock, ZMakesOffDiagonalImaginary) {
  const Complex a_ij(0.3, -0.4);
  const auto block = rotation_block(a_ij, 0.25);
  const Complex z = block.ii / std::sqrt(0.25);
  EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
  EXPECT_NEAR((z * a_ij).real(), 0.0, 1e-15);
  EXPECT_EQ(rotation_block(Complex(0.0), 0.5).ii, Complex(std::sqrt(0.5)));
}

TEST(HornConstruct, TwoByTwoClosedForm) {
  const auto a = horn_construct(EigenList({1, 0}), EigenList({0.7, 0.3}));
  EXPECT_NEAR(a(0, 0).real(), 0.7, 1e-12);
  EXPECT_NEAR(a(1, 1).real(), 0.3, 1e-12);
  // Eigenvalues {1, 0}: a + b = 1 and ab - |c|² = 0.
  EXPECT_NEAR(std::norm(a(0, 1)), 0.21, 1e-12);
  EXPECT_EQ(a(1, 0), std::conj(a(0, 1)));
}

TEST(HornConstruct, IdentityChainGivesDiagonal) {
  const EigenList lambda({4, 2, 2, -1});
  const auto a = horn_construct(lambda, lambda);
  EXPECT_EQ(a.entries(), HermitianMatrix::diagonal(lambda.values()).entries());
}

TEST(HornConstruct, UnitDiagonalWithSpectrumTwoOneZero) {
  const auto a = horn_construct(EigenList({2, 1, 0}), EigenList({1, 1, 1}));
  EXPECT_LE(oracle::max_abs_diff(a.diagonal_values(), {1, 1, 1}), 1e-10);
  EXPECT_LE(oracle::max_abs_diff(oracle::hermitian_eigenvalues(a.entries()), {2, 1, 0}), 1e-8);
}

TEST(HornConstruct, RandomRoundTripsAgainstJacobiOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng.index(20);
    const auto pair = random_majorizing_pair(n, rng);
    const auto built = horn_construct_with_basis(pair.lambda, pair.p);
    EXPECT_LE(oracle::max_abs_diff(built.matrix.diagonal_values(), vec(pair.p)), 1e-10);
    EXPECT_LE(oracle::max_abs_diff(oracle::hermitian_eigenvalues(built.matrix.entries()), vec(pair.lambda)), 1e-8);
    EXPECT_LE(unitarity_defect(built.unitary), 1e-12);
    const ComplexMatrix rebuilt = built.unitary * HermitianMatrix::diagonal(pair.lambda.values()).entries() *
                                  built.unitary.adjoint();
    EXPECT_LE((rebuilt - built.matrix.entries()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HornConstruct, MatchesStepwiseFullUnitaries) {
  // The in-place construction equals composing apply_t_transform step by step.
  Rng rng(31);
  const auto pair = random_majorizing_pair(7, rng);
  HermitianMatrix a = HermitianMatrix::diagonal(pair.lambda.values());
  for (const auto& tau : t_transform_chain(pair.lambda, pair.p)) a = apply_t_transform(a, tau).result;
  EXPECT_LE((a.entries() - horn_construct(pair.lambda, pair.p).entries()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(HornConstruct, RejectsNonMajorized) {
  EXPECT_THROW(horn_construct(EigenList({1, 0}), EigenList({2, -1})), MajorizationViolation);
}

TEST(KyFan, Examples) {
  EXPECT_DOUBLE_EQ(ky_fan_sum(HermitianMatrix::diagonal(std::vector<double>{3, 2, 1}), 2), 5.0);
  Rng rng(1);
  const auto a = random_hermitian(6, rng);
  EXPECT_NEAR(ky_fan_sum(a, 6), a.trace(), 1e-12);
  ComplexMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  EXPECT_NEAR(ky_fan_sum(HermitianMatrix(half), 1), 1.0, 1e-14);
}

TEST(KyFan, KOutOfRange) {
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1, 2});
  EXPECT_THROW(ky_fan_sum(a, 0), InvalidInput);
  EXPECT_THROW(ky_fan_sum(a, 3), InvalidInput);
}

TEST(KyFan, RandomFramesNeverExceedAndEigenframeAttains) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.index(10);
    const auto a = random_hermitian(n, rng);
    const auto eig = eigen_decompose(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const double bound = ky_fan_sum(a, k);
      const auto kk = static_cast<Eigen::Index>(k);
      for (int frame = 0; frame < 20; ++frame) {
        const ComplexMatrix q = random_unitary(n, rng).leftCols(kk);
        EXPECT_LE((q.adjoint() * a.entries() * q).trace().real(), bound + 1e-9);
      }
      const ComplexMatrix top = eig.vectors.leftCols(kk);
      EXPECT_NEAR((top.adjoint() * a.entries() * top).trace().real(), bound, 1e-10);
    }
  }
}

TEST(ApproxConjugate, EqualSpectraGiveZeroDistance) {
  ComplexMatrix half(2, 2);
  half << 0.5, 0.5, 0.5, 0.5;
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1, 0});
  const HermitianMatrix b(half);
  const auto w = approx_conjugate(a, b, 1e-3);
  EXPECT_LE(unitarity_defect(w), 1e-12);
  EXPECT_LE(operator_norm(w * a.entries() * w.adjoint() - b.entries()), 1e-12);
}

TEST(ApproxConjugate, IdenticalMatrices) {
  Rng rng(2);
  const auto a = random_hermitian(5, rng);
  const auto w = approx_conjugate(a, a, 0.1);
  EXPECT_LE(operator_norm(w * a.entries() * w.adjoint() - a.entries()), 1e-12);
}

TEST(ApproxConjugate, ShiftedSpectrum) {
  const double eps = 0.01;
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1, 0});
  const auto b = HermitianMatrix::diagonal(std::vector<double>{1 + eps / 2, 0});
  const auto w = approx_conjugate(a, b, eps);
  EXPECT_NEAR(operator_norm(w * a.entries() * w.adjoint() - b.entries()), eps / 2, 1e-14);
}

TEST(ApproxConjugate, Errors) {
  const auto a = HermitianMatrix::diagonal(std::vector<double>{1, 0});
  EXPECT_THROW(approx_conjugate(a, HermitianMatrix::diagonal(std::vector<double>{1.5, 0}), 0.1), DistributionMismatch);
  EXPECT_THROW(approx_conjugate(a, HermitianMatrix::diagonal(std::vector<double>{1}), 0.1), InvalidInput);
  EXPECT_THROW(approx_conjugate(a, a, 0.0), InvalidInput);
}
