#pragma once

#include <Eigen/Dense>

#include "isolab/graph.hpp"

namespace isolab {

/// Largest order accepted by the dense eigensolver.
inline constexpr Vertex kSpectralCap = 4096;

/// L = D - A as a dense symmetric matrix.
Eigen::MatrixXd laplacian(const Graph& g);

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

/// Second smallest Laplacian eigenvalue with a unit eigenvector.
/// Throws DomainError for n < 2 or n > kSpectralCap.
Eigenpair lambda2_pair(const Graph& g);

/// Second smallest Laplacian eigenvalue. `tol` is the absolute accuracy the
/// caller relies on; values within tol of 0 are reported as exactly 0.
double lambda2(const Graph& g, double tol = 1e-9);

/// λ/2 <= i(G) <= sqrt(λ(2Δ - λ)), λ the second smallest Laplacian eigenvalue.
struct SpectralReport {
  double lambda2 = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double tol = 1e-9;
};

SpectralReport spectral_bounds(const Graph& g, double tol = 1e-9);

}  // namespace isolab
