#include <gtest/gtest.h>

#include <cmath>

#include "isolab/error.hpp"
#include "isolab/iso_solver.hpp"
#include "isolab/process.hpp"
#include "isolab/rng.hpp"
#include "isolab/spectral.hpp"
#include "support.hpp"

namespace isolab {
namespace {

TEST(Laplacian, SmallExamples) {
  Eigen::MatrixXd k2(2, 2);
  k2 << 1, -1, -1, 1;
  EXPECT_EQ(laplacian(complete_graph(2)), k2);
  EXPECT_EQ(laplacian(Graph(3)), Eigen::MatrixXd::Zero(3, 3));
  Eigen::MatrixXd p3(3, 3);
  p3 << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  EXPECT_EQ(laplacian(path_graph(3)), p3);
}

TEST(Laplacian, SymmetricWithZeroRowSums) {
  const Graph g = sample_gnp(15, 0.4, 2);
  const auto L = laplacian(g);
  EXPECT_EQ(L, L.transpose());
  EXPECT_EQ(L.rowwise().sum().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Lambda2, KnownSpectra) {
  for (Vertex n = 2; n <= 20; ++n) EXPECT_NEAR(lambda2(complete_graph(n)), n, 1e-9);
  EXPECT_NEAR(lambda2(cycle_graph(4)), 2.0, 1e-9);
  // Cycle C_n: 2 - 2 cos(2 pi / n).
  for (Vertex n = 3; n <= 20; ++n) EXPECT_NEAR(lambda2(cycle_graph(n)), 2 - 2 * std::cos(2 * M_PI / n), 1e-9);
  // Path P_n: 2 - 2 cos(pi / n).
  for (Vertex n = 2; n <= 20; ++n) EXPECT_NEAR(lambda2(path_graph(n)), 2 - 2 * std::cos(M_PI / n), 1e-9);
  EXPECT_THROW(lambda2(Graph(1)), DomainError);
}

TEST(Lambda2, ZeroExactlyWhenDisconnected) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Vertex n = 3 + k % 15;
    const Graph g = sample_gnp(n, 0.15 + 0.05 * (k % 6), derive_seed(51, {k}));
    const double l2 = lambda2(g);
    EXPECT_EQ(l2 == 0.0, !oracle::connected(n, test::pairs_of(g))) << "k = " << k << " lambda2 = " << l2;
  }
}

TEST(Lambda2, EigenpairResidual) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const Graph g = sample_gnp(25, 0.3, derive_seed(52, {k}));
    const auto pair = lambda2_pair(g);
    const Eigen::VectorXd r = laplacian(g) * pair.vector - pair.value * pair.vector;
    EXPECT_LE(r.cwiseAbs().maxCoeff(), 1e-7 * std::max(1.0, pair.value));
    EXPECT_NEAR(pair.vector.norm(), 1.0, 1e-9);
  }
}

TEST(SpectralBounds, Examples) {
  const auto k4 = spectral_bounds(complete_graph(4));
  EXPECT_NEAR(k4.lower, 2.0, 1e-7);
  EXPECT_NEAR(k4.upper, std::sqrt(8.0), 1e-7);
  const auto c4 = spectral_bounds(cycle_graph(4));
  EXPECT_NEAR(c4.lower, 1.0, 1e-7);
  EXPECT_NEAR(c4.upper, 2.0, 1e-7);
  const auto split = spectral_bounds(Graph::from_edges(4, {Edge{0, 1}, Edge{2, 3}}));
  EXPECT_EQ(split.lower, 0.0);
  EXPECT_EQ(split.upper, 0.0);
}

TEST(SpectralBounds, CompleteGraph) {
  for (Vertex n = 2; n <= 16; ++n) {
    const auto b = spectral_bounds(complete_graph(n));
    EXPECT_NEAR(b.lower, n / 2.0, 1e-7);
    EXPECT_NEAR(b.upper, std::sqrt(double(n) * (2.0 * (n - 1) - n)), 1e-7);
  }
}

TEST(SpectralBounds, SandwichExactIsoperimetricConstant) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Vertex n = 4 + k % 13;
    const Graph g = sample_gnp(n, 0.2 + 0.1 * (k % 8), derive_seed(53, {k}));
    const auto b = spectral_bounds(g);
    const double i = iso_exact(g).ratio.to_double();
    ASSERT_LE(b.lambda2, 2.0 * max_degree(g) + 1e-9);
    ASSERT_LE(b.lower, b.upper + 1e-12);
    ASSERT_LE(b.lower - 1e-7, i);
    ASSERT_LE(i, b.upper + 1e-7);
  }
}

}  // namespace
}  // namespace isolab
