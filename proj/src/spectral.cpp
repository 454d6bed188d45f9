#include "isolab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isolab/error.hpp"

namespace isolab {

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    l(u, u) = g.degree(u);
    for (Vertex v : g.neighbors(u)) l(u, v) = -1.0;
  }
  return l;
}

Eigenpair lambda2_pair(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n < 2) throw DomainError("lambda2 needs n >= 2");
  if (n > kSpectralCap) {
    throw DomainError("dense eigensolve capped at n = " + std::to_string(kSpectralCap));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g));
  if (solver.info() != Eigen::Success) throw InvariantError("symmetric eigensolver did not converge");
  // Eigenvalues come back in increasing order.
  return {std::max(0.0, solver.eigenvalues()(1)), solver.eigenvectors().col(1)};
}

double lambda2(const Graph& g, double tol) {
  const double value = lambda2_pair(g).value;
  return value < tol ? 0.0 : value;
}

SpectralReport spectral_bounds(const Graph& g, double tol) {
  SpectralReport report;
  report.tol = tol;
  report.lambda2 = lambda2(g, tol);
  const double delta_max = max_degree(g);
  report.lower = report.lambda2 / 2.0;
  report.upper = std::sqrt(std::max(0.0, report.lambda2 * (2.0 * delta_max - report.lambda2)));
  return report;
}

}  // namespace isolab
