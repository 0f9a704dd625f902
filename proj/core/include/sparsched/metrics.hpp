#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sparsched/linsys.hpp"
#include "sparsched/types.hpp"

namespace sparsched {

/// CLI / file-format names: "trace-inv", "lambda-min-inv", "neg-log-det".
std::string to_string(MetricKind kind);
std::optional<MetricKind> metric_from_string(std::string_view name);

/// Regularization slack schedule: start at eps0, multiply by growth until the
/// metric value is finite, give up after max_tries.
struct EpsPolicy {
  double eps0 = 1e-10;
  double growth = 10.0;
  int max_tries = 12;

  void validate() const;
};

/// Cost of a symmetric PSD matrix W, lower is better:
///   TraceInverse  -> tr((W + eps I)^-1)
///   MinEigInverse -> 1 / (lambda_min(W) + eps)
///   NegLogDet     -> -log det(W + eps I)
/// Eigenvalues at or below the psd_rank_threshold cutoff are treated as exact
/// zeros, so candidate comparisons are driven by rank first and conditioning
/// second rather than by round-off in the null directions. Returns +inf when
/// eps = 0 and W is singular under that cutoff.
/// Throws InvalidInput if W is not symmetric or has a significantly negative
/// eigenvalue.
double eval_metric(const Matrix& W, MetricKind kind, double eps,
                   double rank_tol = kDefaultRankTol);

struct RobustEval {
  double value = 0.0;
  double eps_used = 0.0;
};

/// eval_metric with the slack grown per policy until the value is finite.
/// Throws NumericalFailure when max_tries is exceeded.
RobustEval eval_metric_robust(const Matrix& W, MetricKind kind,
                              const EpsPolicy& policy,
                              double rank_tol = kDefaultRankTol);

}  // namespace sparsched
