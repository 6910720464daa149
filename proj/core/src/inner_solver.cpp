#include "padmm/inner_solver.hpp"

#include <cmath>
#include <utility>

#include "padmm/errors.hpp"

namespace padmm {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw NonFiniteObjective(std::string("minimize: non-finite ") + what);
  }
}

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) {
    throw NonFiniteObjective(std::string("minimize: non-finite ") + what);
  }
}

}  // namespace

SolveReport minimize(const LocalObjective& objective, const Eigen::VectorXd& x0,
                     const MinimizeOptions& options) {
  if (!(options.tol > 0.0)) throw InvalidArgument("minimize: tol must be positive");
  if (x0.size() != objective.dim()) {
    throw DimensionMismatch("minimize: x0 dimension mismatch");
  }

  Eigen::VectorXd x = x0;
  double fx = objective.value(x);
  require_finite(fx, "objective at x0");
  Eigen::VectorXd g = objective.gradient(x);
  require_finite(g, "gradient at x0");

  double gnorm = g.norm();
  double step = 1.0;
  int it = 0;
  while (it < options.max_iter && gnorm > options.tol) {
    const double g2 = gnorm * gnorm;
    double t = step;
    bool accepted = false;
    for (int bt = 0; bt < options.max_backtracks; ++bt) {
      Eigen::VectorXd cand = x - t * g;
      const double fc = objective.value(cand);
      // Overflowing trial points are treated as failed steps, not errors.
      if (std::isfinite(fc) && fc <= fx - options.armijo_c * t * g2) {
        x = std::move(cand);
        fx = fc;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // no progress at representable step sizes

    if (options.observer) options.observer(x, fx);
    step = t * 2.0;
    g = objective.gradient(x);
    require_finite(g, "gradient");
    gnorm = g.norm();
    ++it;
  }

  SolveReport report;
  report.solution = std::move(x);
  report.gradient_norm = gnorm;
  report.iterations = it;
  report.converged = gnorm <= options.tol;
  return report;
}

}  // namespace padmm
