#include "hyperwalk/laplacian.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace hyperwalk {

LaplacianPair build_laplacians(const TransitionMatrix& P, const RankVector& pi) {
  const Index n = P.size();
  if (pi.values.size() != n) throw Error(ErrorCode::InvalidArgument, "pi and P differ in size");
  if (pi.normalization != Normalization::L1 || std::abs(pi.values.sum() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "Laplacians require an L1-normalized pi");
  }
  for (Index v = 0; v < n; ++v) {
    if (!(pi.values(v) > 0.0)) {
      throw Error(ErrorCode::NonpositivePi, "pi is not strictly positive at vertex " + pi.vertices[v]);
    }
  }
  const Eigen::VectorXd drift = P.matrix.transpose() * pi.values - pi.values;
  if (drift.lpNorm<1>() > kStationarityTolerance) {
    throw Error(ErrorCode::NotStationary, "pi is not stationary for P: ||P^T pi - pi||_1 = " +
                                              std::to_string(drift.lpNorm<1>()));
  }

  const Eigen::MatrixXd dense = P.matrix;
  const Eigen::MatrixXd L = unnormalized_laplacian(dense, pi.values);
  const Eigen::MatrixXd Lsym = symmetric_normalized_laplacian(dense, pi.values);

  LaplacianPair pair;
  pair.pi = pi;
  pair.unnormalized_raw_defect = symmetry_defect(L);
  pair.symmetric_raw_defect = symmetry_defect(Lsym);
  pair.unnormalized = symmetrized(L);
  pair.symmetric_normalized = symmetrized(Lsym);
  return pair;
}

SpectralReport spectral_report(const LaplacianPair& pair, Index dense_limit) {
  const Index n = pair.unnormalized.rows();
  if (n > dense_limit) {
    throw Error(ErrorCode::DenseLimitExceeded,
                std::to_string(n) + " vertices exceed the dense limit of " + std::to_string(dense_limit));
  }
  SpectralReport r;
  r.unnormalized_symmetry_defect = pair.unnormalized_raw_defect;
  r.symmetric_symmetry_defect = pair.symmetric_raw_defect;
  if (n == 0) return r;

  r.unnormalized_null_residual = (pair.unnormalized * Eigen::VectorXd::Ones(n)).lpNorm<Eigen::Infinity>();
  r.symmetric_null_residual = (pair.symmetric_normalized * pair.pi.values.cwiseSqrt()).lpNorm<Eigen::Infinity>();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_l(pair.unnormalized, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig_sym(pair.symmetric_normalized, Eigen::EigenvaluesOnly);
  r.unnormalized_min_eigenvalue = eig_l.eigenvalues().minCoeff();
  r.symmetric_min_eigenvalue = eig_sym.eigenvalues().minCoeff();
  return r;
}

bool within_tolerances(const SpectralReport& r, const LaplacianTolerances& tol) {
  return r.unnormalized_symmetry_defect <= tol.symmetry && r.symmetric_symmetry_defect <= tol.symmetry &&
         r.unnormalized_null_residual <= tol.null_residual && r.symmetric_null_residual <= tol.null_residual &&
         r.unnormalized_min_eigenvalue >= tol.min_eigenvalue && r.symmetric_min_eigenvalue >= tol.min_eigenvalue;
}

}  // namespace hyperwalk
