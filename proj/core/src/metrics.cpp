#include "sparsched/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace sparsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::TraceInverse:
      return "trace-inv";
    case MetricKind::MinEigInverse:
      return "lambda-min-inv";
    case MetricKind::NegLogDet:
      return "neg-log-det";
  }
  return "unknown";
}

std::optional<MetricKind> metric_from_string(std::string_view name) {
  if (name == "trace-inv") return MetricKind::TraceInverse;
  if (name == "lambda-min-inv") return MetricKind::MinEigInverse;
  if (name == "neg-log-det") return MetricKind::NegLogDet;
  return std::nullopt;
}

void EpsPolicy::validate() const {
  if (eps0 < 0) throw InvalidInput("eps0 must be >= 0");
  if (growth <= 1) throw InvalidInput("eps growth must be > 1");
  if (max_tries < 1) throw InvalidInput("max_tries must be >= 1");
}

double eval_metric(const Matrix& W, MetricKind kind, double eps, double rank_tol) {
  const Eigen::Index n = W.rows();
  if (n == 0 || W.cols() != n) throw InvalidInput("metric: W must be square");
  if (eps < 0) throw InvalidInput("metric: eps must be >= 0");
  const double scale = std::max(W.cwiseAbs().maxCoeff(), 1.0);
  if ((W - W.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw InvalidInput("metric: W must be symmetric");

  Eigen::SelfAdjointEigenSolver<Matrix> es(W, Eigen::EigenvaluesOnly);
  Eigen::VectorXd lam = es.eigenvalues();
  const double lmax = lam(n - 1);
  if (lam(0) < -1e-8 * std::max(lmax, 1.0))
    throw InvalidInput("metric: W must be positive semidefinite");

  const double cutoff =
      psd_rank_threshold(std::max(lmax, 0.0), static_cast<int>(n), rank_tol);
  for (Eigen::Index i = 0; i < n; ++i) lam(i) = lam(i) > cutoff ? lam(i) : 0.0;

  switch (kind) {
    case MetricKind::TraceInverse: {
      double total = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double d = lam(i) + eps;
        if (d <= 0.0) return kInf;
        total += 1.0 / d;
      }
      return total;
    }
    case MetricKind::MinEigInverse: {
      const double d = lam(0) + eps;
      return d > 0.0 ? 1.0 / d : kInf;
    }
    case MetricKind::NegLogDet: {
      double total = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double d = lam(i) + eps;
        if (d <= 0.0) return kInf;
        total -= std::log(d);
      }
      return total;
    }
  }
  throw InvalidInput("metric: unknown kind");
}

RobustEval eval_metric_robust(const Matrix& W, MetricKind kind,
                              const EpsPolicy& policy, double rank_tol) {
  policy.validate();
  double eps = policy.eps0;
  for (int attempt = 0; attempt < policy.max_tries; ++attempt) {
    const double value = eval_metric(W, kind, eps, rank_tol);
    if (std::isfinite(value)) return RobustEval{value, eps};
    // Growing from an exact zero slack needs a nonzero starting point.
    eps = eps == 0.0 ? std::numeric_limits<double>::epsilon() : eps * policy.growth;
  }
  throw NumericalFailure("metric evaluation stayed non-finite after " +
                         std::to_string(policy.max_tries) + " slack increases");
}

}  // namespace sparsched
