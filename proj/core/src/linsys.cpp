#include "sparsched/linsys.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace sparsched {

LtiSystem::LtiSystem(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
  if (A.rows() < 1 || A.rows() != A.cols())
    throw InvalidInput("A must be square with n >= 1");
  if (B.rows() != A.rows())
    throw InvalidInput("B must have exactly n rows");
  if (B.cols() < 1) throw InvalidInput("B must have m >= 1 columns");
  if (!A.allFinite() || !B.allFinite())
    throw InvalidInput("system matrices must be finite");
}

Schedule Schedule::full(int h, int m) {
  Schedule sched;
  sched.steps.assign(h, {});
  for (auto& step : sched.steps) {
    step.resize(m);
    for (int c = 0; c < m; ++c) step[c] = c;
  }
  return sched;
}

int Schedule::total_active() const {
  int total = 0;
  for (const auto& step : steps) total += static_cast<int>(step.size());
  return total;
}

bool Schedule::is_s_sparse(int s) const {
  return std::all_of(steps.begin(), steps.end(), [s](const auto& step) {
    return static_cast<int>(step.size()) <= s;
  });
}

bool Schedule::contains(int step, int channel) const {
  const auto& set = steps.at(step);
  return std::binary_search(set.begin(), set.end(), channel);
}

void Schedule::add(int step, int channel) {
  auto& set = steps.at(step);
  auto it = std::lower_bound(set.begin(), set.end(), channel);
  if (it != set.end() && *it == channel) return;
  set.insert(it, channel);
}

void Schedule::remove(int step, int channel) {
  auto& set = steps.at(step);
  auto it = std::lower_bound(set.begin(), set.end(), channel);
  if (it != set.end() && *it == channel) set.erase(it);
}

void Schedule::validate(int m) const {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& set = steps[k];
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= m)
        throw InvalidInput("schedule step " + std::to_string(k) +
                           ": channel index out of range");
      if (i > 0 && set[i] <= set[i - 1])
        throw InvalidInput("schedule step " + std::to_string(k) +
                           ": channels must be sorted and distinct");
    }
  }
}

void DesignConfig::validate() const {
  if (s < 1) throw InvalidInput("sparsity s must be >= 1");
  if (h < 1) throw InvalidInput("horizon h must be >= 1");
  if (eps0 < 0) throw InvalidInput("eps0 must be >= 0");
  if (eps_growth <= 1) throw InvalidInput("eps_growth must be > 1");
  if (rank_tol <= 0) throw InvalidInput("rank_tol must be > 0");
}

MatrixPowers::MatrixPowers(const Matrix& A, int max_exponent) {
  const auto n = A.rows();
  powers_.reserve(max_exponent + 1);
  powers_.push_back(Matrix::Identity(n, n));
  for (int k = 1; k <= max_exponent; ++k) powers_.push_back(powers_.back() * A);
}

int matrix_rank(const Matrix& M, double rank_tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return 0;
  const double cutoff =
      rank_tol * sv(0) * static_cast<double>(std::max(M.rows(), M.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

double psd_rank_threshold(double lambda_max, int n, double rank_tol) {
  const double nd = static_cast<double>(n);
  // sigma-convention cutoff squared, floored above eigensolver round-off on
  // lambda (which scales like n * machine-eps * lambda_max).
  const double rel = std::max(rank_tol * rank_tol * nd * nd, 1e-13 * nd);
  return lambda_max * rel;
}

int psd_rank(const Matrix& W, double rank_tol) {
  if (W.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(W, Eigen::EigenvaluesOnly);
  const auto& lam = es.eigenvalues();
  const double lmax = lam(lam.size() - 1);
  if (!(lmax > 0)) return 0;
  const double cutoff =
      psd_rank_threshold(lmax, static_cast<int>(W.rows()), rank_tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > cutoff) ++rank;
  return rank;
}

Matrix reachability_matrix(const LtiSystem& sys, const Schedule& sched) {
  const MatrixPowers powers(sys.A, std::max(0, sched.horizon() - 1));
  return reachability_matrix(sys, sched, powers);
}

Matrix reachability_matrix(const LtiSystem& sys, const Schedule& sched,
                           const MatrixPowers& powers) {
  sched.validate(sys.m());
  const int h = sched.horizon();
  Matrix phi(sys.n(), sched.total_active());
  Eigen::Index col = 0;
  for (int k = 0; k < h; ++k) {
    const Matrix& Ak = powers(h - 1 - k);
    for (int c : sched.steps[k]) phi.col(col++) = Ak * sys.B.col(c);
  }
  return phi;
}

Matrix gramian(const LtiSystem& sys, const Schedule& sched) {
  const Matrix phi = reachability_matrix(sys, sched);
  return phi * phi.transpose();
}

Matrix gramian(const LtiSystem& sys, const Schedule& sched,
               const MatrixPowers& powers) {
  const Matrix phi = reachability_matrix(sys, sched, powers);
  return phi * phi.transpose();
}

bool kalman_controllable(const LtiSystem& sys, double rank_tol) {
  const int n = sys.n();
  const int m = sys.m();
  Matrix ctrl(n, static_cast<Eigen::Index>(n) * m);
  Matrix block = sys.B;
  ctrl.leftCols(m) = block;
  for (int k = 1; k < n; ++k) {
    block = sys.A * block;
    ctrl.middleCols(static_cast<Eigen::Index>(k) * m, m) = block;
  }
  return matrix_rank(ctrl, rank_tol) == n;
}

bool sparse_controllable(const LtiSystem& sys, int s, double rank_tol) {
  if (s < 1) throw InvalidInput("sparsity s must be >= 1");
  const int nullity = sys.n() - matrix_rank(sys.A, rank_tol);
  return kalman_controllable(sys, rank_tol) && s >= std::max(nullity, 1);
}

HorizonBounds horizon_bounds(const LtiSystem& sys, int s, double rank_tol) {
  if (s < 1) throw InvalidInput("sparsity s must be >= 1");
  const int n = sys.n();
  const int r = std::min(matrix_rank(sys.B, rank_tol), s);
  HorizonBounds bounds;
  if (r == 0) {
    // B contributes nothing; no horizon can work.
    bounds.lower = std::numeric_limits<int>::max();
    bounds.upper = std::numeric_limits<int>::max();
    return bounds;
  }
  bounds.lower = (n + r - 1) / r;  // ceil(n / r)
  bounds.upper = n - r + 1;
  return bounds;
}

int rank_stabilization_index(const LtiSystem& sys, double rank_tol) {
  const int n = sys.n();
  Matrix power = Matrix::Identity(n, n);
  int prev_rank = n;  // rank(A^0)
  for (int k = 0; k < n; ++k) {
    power = power * sys.A;
    const int next_rank = matrix_rank(power, rank_tol);
    if (next_rank == prev_rank) return k;
    prev_rank = next_rank;
  }
  return n;
}

FeasibilityReport feasibility_check(const LtiSystem& sys, const DesignConfig& cfg) {
  cfg.validate();
  FeasibilityReport report;
  report.s = cfg.s;
  report.h = cfg.h;
  report.controllable = kalman_controllable(sys, cfg.rank_tol);
  report.nullity = sys.n() - matrix_rank(sys.A, cfg.rank_tol);
  report.sparse_controllable =
      report.controllable && cfg.s >= std::max(report.nullity, 1);
  report.r_index = rank_stabilization_index(sys, cfg.rank_tol);
  report.bounds = horizon_bounds(sys, cfg.s, cfg.rank_tol);
  report.horizon_necessary = cfg.h >= report.bounds.lower;
  report.horizon_sufficient = cfg.h >= report.bounds.upper;
  return report;
}

}  // namespace sparsched
