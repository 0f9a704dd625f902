#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace sparsched {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative singular-value cutoff used by all rank decisions unless a
/// config overrides it.
inline constexpr double kDefaultRankTol = 1e-10;

/// Malformed caller input: bad dimensions, out-of-range values, broken files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine exhausted its options without a finite result.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested design cannot be completed (candidate exhaustion, no
/// full-rank target reachable).
class InfeasibleProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random instance generation gave up after its retry budget.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the caller-supplied work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparsched
