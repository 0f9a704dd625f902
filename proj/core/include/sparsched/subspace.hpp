#pragma once

#include "sparsched/linsys.hpp"
#include "sparsched/types.hpp"

namespace sparsched {

/// Orthonormal basis of a subspace of R^n. basis^T * basis = I within tol;
/// dim() <= n. A zero-dimensional subspace has an n x 0 basis.
struct SubspaceBasis {
  Matrix basis;
  double tol = kDefaultRankTol;

  int dim() const { return static_cast<int>(basis.cols()); }
  int ambient_dim() const { return static_cast<int>(basis.rows()); }
};

/// Orthonormal basis of { z : M^T z = 0 }; dim = rows(M) - rank(M).
SubspaceBasis left_kernel(const Matrix& M, double rank_tol = kDefaultRankTol);

/// Orthogonal projector P = I - M M^+ onto the left kernel of M, built from
/// a singular value decomposition with sub-cutoff singular values truncated,
/// so P is symmetric and idempotent to working precision.
Matrix left_kernel_projector(const Matrix& M, double rank_tol = kDefaultRankTol);

/// Projector onto ker((A^k)^T). Zero matrix for k = 0 or invertible A.
Matrix kernel_projector(const LtiSystem& sys, int k,
                        double rank_tol = kDefaultRankTol);

/// Orthonormal basis of ker((A^k)^T) with the smaller kernel ker((A^{k-1})^T)
/// removed: the directions that only inputs applied k steps before the end
/// can still cover. dim = rank(A^{k-1}) - rank(A^k). Requires k >= 1.
SubspaceBasis kernel_chain_subspace(const LtiSystem& sys, int k,
                                    double rank_tol = kDefaultRankTol);
SubspaceBasis kernel_chain_subspace(const Matrix& pow_km1, const Matrix& pow_k,
                                    double rank_tol = kDefaultRankTol);

/// Orthogonal projection of the columns of v onto K: K.basis (K.basis^T v).
Matrix project(const Matrix& v, const SubspaceBasis& K);

/// True iff project(v, K) lies in the column span of project(cols, K),
/// decided by rank non-increase under rank_tol.
bool is_in_span(const Vector& v, const Matrix& cols, const SubspaceBasis& K,
                double rank_tol = kDefaultRankTol);

}  // namespace sparsched
