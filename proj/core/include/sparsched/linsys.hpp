#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsched/types.hpp"

namespace sparsched {

/// Discrete-time pair (A, B): x(k+1) = A x(k) + B u(k).
/// A is n x n, B is n x m. Channels are the columns of B, 0-based here;
/// file formats use 1-based channel indices.
struct LtiSystem {
  Matrix A;
  Matrix B;

  LtiSystem(Matrix a, Matrix b);

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(B.cols()); }
};

/// One channel set per time step; channels sorted ascending, no duplicates.
struct Schedule {
  std::vector<std::vector<int>> steps;

  static Schedule empty(int h) { return Schedule{std::vector<std::vector<int>>(h)}; }
  static Schedule full(int h, int m);

  int horizon() const { return static_cast<int>(steps.size()); }
  int total_active() const;
  bool is_s_sparse(int s) const;
  bool contains(int step, int channel) const;
  void add(int step, int channel);
  void remove(int step, int channel);

  /// Throws InvalidInput unless every step holds sorted, distinct channel
  /// indices in [0, m).
  void validate(int m) const;

  bool operator==(const Schedule& other) const { return steps == other.steps; }
};

enum class MetricKind { TraceInverse, MinEigInverse, NegLogDet };

struct DesignConfig {
  int s = 1;
  int h = 1;
  MetricKind metric = MetricKind::TraceInverse;
  double eps0 = 1e-10;
  double eps_growth = 10.0;
  double rank_tol = kDefaultRankTol;
  std::uint64_t seed = 0;

  /// Throws InvalidInput on s < 1, h < 1, eps0 < 0, eps_growth <= 1,
  /// rank_tol <= 0.
  void validate() const;
};

/// A^0 .. A^max_exponent, computed once and reused across a design run.
class MatrixPowers {
 public:
  MatrixPowers(const Matrix& A, int max_exponent);
  const Matrix& operator()(int k) const { return powers_.at(k); }
  int max_exponent() const { return static_cast<int>(powers_.size()) - 1; }

 private:
  std::vector<Matrix> powers_;
};

/// Rank by SVD: a singular value counts iff
/// sigma > rank_tol * sigma_max * max(rows, cols).
int matrix_rank(const Matrix& M, double rank_tol = kDefaultRankTol);

/// Rank of a symmetric PSD matrix from its eigenvalues, with a threshold
/// consistent with matrix_rank on clean instances but floored above
/// eigenvalue round-off. Returns the same count as matrix_rank(Phi) when
/// W = Phi * Phi^T and the spectrum has a clear gap.
int psd_rank(const Matrix& W, double rank_tol = kDefaultRankTol);

/// Eigenvalue cutoff used by psd_rank and metric evaluation: eigenvalues at
/// or below it are treated as exact zeros.
double psd_rank_threshold(double lambda_max, int n, double rank_tol);

/// [A^{h-1} B_{S_0} | A^{h-2} B_{S_1} | ... | B_{S_{h-1}}], with columns in
/// ascending channel order inside each block. Size n x total_active().
Matrix reachability_matrix(const LtiSystem& sys, const Schedule& sched);
Matrix reachability_matrix(const LtiSystem& sys, const Schedule& sched,
                           const MatrixPowers& powers);

/// The n x n matrix W = Phi * Phi^T for Phi = reachability_matrix.
/// rank(W) = rank(Phi); the nonzero spectrum matches the column Gramian.
Matrix gramian(const LtiSystem& sys, const Schedule& sched);
Matrix gramian(const LtiSystem& sys, const Schedule& sched,
               const MatrixPowers& powers);

/// Kalman test: rank([B, AB, ..., A^{n-1}B]) == n.
bool kalman_controllable(const LtiSystem& sys, double rank_tol = kDefaultRankTol);

/// Controllable with channel budget s per step: Kalman test plus
/// s >= max(n - rank(A), 1). Requires s >= 1.
bool sparse_controllable(const LtiSystem& sys, int s,
                         double rank_tol = kDefaultRankTol);

struct HorizonBounds {
  int lower = 0;  // ceil(n / min(rank(B), s)); no shorter horizon can work
  int upper = 0;  // n - min(rank(B), s) + 1; this horizon always suffices
};
HorizonBounds horizon_bounds(const LtiSystem& sys, int s,
                             double rank_tol = kDefaultRankTol);

/// Smallest k >= 0 with rank(A^k) == rank(A^{k+1}); always <= n.
/// Zero iff A has full rank. Bounds the depth of the left-kernel chain.
int rank_stabilization_index(const LtiSystem& sys,
                             double rank_tol = kDefaultRankTol);

struct FeasibilityReport {
  int s = 0;
  int h = 0;
  bool controllable = false;         // Kalman test
  bool sparse_controllable = false;  // Kalman test + s >= max(nullity, 1)
  int nullity = 0;                   // n - rank(A)
  int r_index = 0;                   // rank_stabilization_index
  HorizonBounds bounds;
  bool horizon_necessary = false;   // h >= bounds.lower
  bool horizon_sufficient = false;  // h >= bounds.upper

  /// All necessary conditions hold; a design may still exist only if true.
  bool feasible_necessary() const { return sparse_controllable && horizon_necessary; }
  /// Sufficient conditions hold; a full-rank s-sparse schedule exists.
  bool feasible_sufficient() const { return sparse_controllable && horizon_sufficient; }
};

FeasibilityReport feasibility_check(const LtiSystem& sys, const DesignConfig& cfg);

}  // namespace sparsched
