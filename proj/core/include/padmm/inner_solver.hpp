#pragma once

#include <Eigen/Core>
#include <functional>

namespace padmm {

// Differentiable objective fed to the inner solver. Implementations must be
// re-entrant; minimizations for different nodes run concurrently.
class LocalObjective {
 public:
  virtual ~LocalObjective() = default;
  virtual int dim() const = 0;
  virtual double value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd gradient(const Eigen::VectorXd& x) const = 0;
};

struct SolveReport {
  Eigen::VectorXd solution;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct MinimizeOptions {
  double tol = 1e-9;       // on the gradient norm
  int max_iter = 10000;
  double armijo_c = 1e-4;
  int max_backtracks = 200;
  // Called after each accepted step with (iterate, objective value).
  std::function<void(const Eigen::VectorXd&, double)> observer;
};

// Gradient descent with Armijo backtracking (halving). The accepted step size
// carries over between iterations (doubled as the next trial). Deterministic:
// identical inputs produce bit-identical outputs.
SolveReport minimize(const LocalObjective& objective, const Eigen::VectorXd& x0,
                     const MinimizeOptions& options = {});

}  // namespace padmm
