#pragma once

#include <Eigen/Core>

#include "hyperwalk/walkrank.hpp"

namespace hyperwalk {

/// max |A - A^T|.
template <typename Derived>
typename Derived::Scalar symmetry_defect(const Eigen::MatrixBase<Derived>& A) {
  if (A.size() == 0) return typename Derived::Scalar(0);
  return (A - A.transpose()).cwiseAbs().maxCoeff();
}

/// (A + A^T) / 2.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> symmetrized(const Eigen::MatrixBase<Derived>& A) {
  return (A + A.transpose()) / typename Derived::Scalar(2);
}

/// S - (S P + P^T S) / 2 with S = diag(pi), before symmetrization.
template <typename DerivedP, typename DerivedPi>
DenseMatrix<typename DerivedP::Scalar> unnormalized_laplacian(const Eigen::MatrixBase<DerivedP>& P,
                                                              const Eigen::MatrixBase<DerivedPi>& pi) {
  using Scalar = typename DerivedP::Scalar;
  const auto S = pi.asDiagonal();
  DenseMatrix<Scalar> SP = S * P;
  DenseMatrix<Scalar> PtS = P.transpose() * S;
  DenseMatrix<Scalar> L = -(SP + PtS) / Scalar(2);
  L.diagonal() += pi;
  return L;
}

/// I - (S^1/2 P S^-1/2 + S^-1/2 P^T S^1/2) / 2, before symmetrization. pi must be > 0.
template <typename DerivedP, typename DerivedPi>
DenseMatrix<typename DerivedP::Scalar> symmetric_normalized_laplacian(const Eigen::MatrixBase<DerivedP>& P,
                                                                      const Eigen::MatrixBase<DerivedPi>& pi) {
  using Scalar = typename DerivedP::Scalar;
  const DenseVector<Scalar> root = pi.cwiseSqrt();
  const DenseVector<Scalar> inv_root = root.cwiseInverse();
  DenseMatrix<Scalar> forward = root.asDiagonal() * P * inv_root.asDiagonal();
  DenseMatrix<Scalar> backward = inv_root.asDiagonal() * P.transpose() * root.asDiagonal();
  DenseMatrix<Scalar> L = -(forward + backward) / Scalar(2);
  L.diagonal().array() += Scalar(1);
  return L;
}

struct LaplacianPair {
  Eigen::MatrixXd unnormalized;
  Eigen::MatrixXd symmetric_normalized;
  RankVector pi;
  // Asymmetry of the matrices as computed, before averaging with the transpose.
  double unnormalized_raw_defect = 0.0;
  double symmetric_raw_defect = 0.0;
};

/// Stationarity bound on ||P^T pi - pi||_1 required before building.
inline constexpr double kStationarityTolerance = 1e-8;

/// Requires an L1-normalized, strictly positive pi that is stationary for P.
LaplacianPair build_laplacians(const TransitionMatrix& P, const RankVector& pi);

struct SpectralReport {
  double unnormalized_symmetry_defect = 0.0;
  double symmetric_symmetry_defect = 0.0;
  double unnormalized_null_residual = 0.0;  // ||L 1||_inf
  double symmetric_null_residual = 0.0;     // ||L_sym sqrt(pi)||_inf
  double unnormalized_min_eigenvalue = 0.0;
  double symmetric_min_eigenvalue = 0.0;
};

SpectralReport spectral_report(const LaplacianPair& pair, Index dense_limit = kDefaultDenseLimit);

struct LaplacianTolerances {
  double symmetry = 1e-12;
  double null_residual = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// True when every invariant holds within `tol`.
bool within_tolerances(const SpectralReport& report, const LaplacianTolerances& tol = {});

}  // namespace hyperwalk
