#include "sparsched/subspace.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace sparsched {

namespace {

int sv_rank(const Eigen::VectorXd& sv, double rank_tol, Eigen::Index rows,
            Eigen::Index cols) {
  if (sv.size() == 0 || !(sv(0) > 0)) return 0;
  const double cutoff = rank_tol * sv(0) * static_cast<double>(std::max(rows, cols));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

SubspaceBasis left_kernel(const Matrix& M, double rank_tol) {
  const Eigen::Index n = M.rows();
  if (M.cols() == 0) {
    return SubspaceBasis{Matrix::Identity(n, n), rank_tol};
  }
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU);
  const int rank = sv_rank(svd.singularValues(), rank_tol, M.rows(), M.cols());
  SubspaceBasis result;
  result.basis = svd.matrixU().rightCols(n - rank);
  result.tol = rank_tol;
  return result;
}

Matrix left_kernel_projector(const Matrix& M, double rank_tol) {
  const Eigen::Index n = M.rows();
  if (M.cols() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU);
  const int rank = sv_rank(svd.singularValues(), rank_tol, M.rows(), M.cols());
  const Matrix range = svd.matrixU().leftCols(rank);
  return Matrix::Identity(n, n) - range * range.transpose();
}

Matrix kernel_projector(const LtiSystem& sys, int k, double rank_tol) {
  if (k < 0) throw InvalidInput("kernel_projector: k must be >= 0");
  if (k == 0) return Matrix::Zero(sys.n(), sys.n());
  const MatrixPowers powers(sys.A, k);
  return left_kernel_projector(powers(k), rank_tol);
}

SubspaceBasis kernel_chain_subspace(const LtiSystem& sys, int k, double rank_tol) {
  if (k < 1) throw InvalidInput("kernel_chain_subspace: k must be >= 1");
  const MatrixPowers powers(sys.A, k);
  return kernel_chain_subspace(powers(k - 1), powers(k), rank_tol);
}

SubspaceBasis kernel_chain_subspace(const Matrix& pow_km1, const Matrix& pow_k,
                                    double rank_tol) {
  const SubspaceBasis larger = left_kernel(pow_k, rank_tol);
  SubspaceBasis result;
  result.tol = rank_tol;
  if (larger.dim() == 0) {
    result.basis = Matrix(pow_k.rows(), 0);
    return result;
  }
  const SubspaceBasis smaller = left_kernel(pow_km1, rank_tol);
  // Remove the smaller kernel from the larger one, then re-orthonormalize.
  // The kernels are nested, so the residual columns have singular values
  // clustered at 1 (kept) and 0 (dropped).
  Matrix residual = larger.basis;
  if (smaller.dim() > 0)
    residual -= smaller.basis * (smaller.basis.transpose() * larger.basis);
  Eigen::JacobiSVD<Matrix> svd(residual, Eigen::ComputeThinU);
  const int dim =
      sv_rank(svd.singularValues(), rank_tol, residual.rows(), residual.cols());
  result.basis = svd.matrixU().leftCols(dim);
  return result;
}

Matrix project(const Matrix& v, const SubspaceBasis& K) {
  if (v.rows() != K.basis.rows())
    throw InvalidInput("project: ambient dimensions differ");
  return K.basis * (K.basis.transpose() * v);
}

bool is_in_span(const Vector& v, const Matrix& cols, const SubspaceBasis& K,
                double rank_tol) {
  if (v.size() != K.basis.rows() || (cols.size() > 0 && cols.rows() != v.size()))
    throw InvalidInput("is_in_span: ambient dimensions differ");
  // Work in K coordinates: span comparisons are invariant under the
  // orthonormal change of basis and the problem shrinks to dim(K) rows.
  const Vector y = K.basis.transpose() * v;
  if (cols.cols() == 0) {
    const double scale = std::max(v.norm(), 1.0);
    return y.norm() <= rank_tol * scale;
  }
  const Matrix ycols = K.basis.transpose() * cols;
  Matrix joined(ycols.rows(), ycols.cols() + 1);
  joined << ycols, y;
  return matrix_rank(joined, rank_tol) == matrix_rank(ycols, rank_tol);
}

}  // namespace sparsched
