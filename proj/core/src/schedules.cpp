#include "padmm/schedules.hpp"

#include <cmath>

#include "padmm/errors.hpp"

namespace padmm {

PenaltySchedule PenaltySchedule::uniform(int n_nodes, double eta1, double q,
                                         double theta) {
  PenaltySchedule s;
  s.eta1 = Eigen::VectorXd::Constant(n_nodes, eta1);
  s.q = Eigen::VectorXd::Constant(n_nodes, q);
  s.theta = theta;
  return s;
}

double PenaltySchedule::penalty_at(int node, long t) const {
  if (node < 0 || node >= n_nodes()) {
    throw InvalidArgument("penalty_at: node out of range");
  }
  if (t < 1) throw InvalidArgument("penalty_at: t must be >= 1");
  return eta1(node) * std::pow(q(node), static_cast<double>(t - 1));
}

Eigen::VectorXd PenaltySchedule::penalties_at(long t) const {
  Eigen::VectorXd out(n_nodes());
  for (int i = 0; i < n_nodes(); ++i) out(i) = penalty_at(i, t);
  return out;
}

NoiseSchedule NoiseSchedule::uniform(int n_nodes, double alpha1, double q) {
  NoiseSchedule s;
  s.alpha1 = Eigen::VectorXd::Constant(n_nodes, alpha1);
  s.q = Eigen::VectorXd::Constant(n_nodes, q);
  return s;
}

double NoiseSchedule::alpha_at(int node, long t) const {
  if (node < 0 || node >= n_nodes()) {
    throw InvalidArgument("alpha_at: node out of range");
  }
  if (t < 1) throw InvalidArgument("alpha_at: t must be >= 1");
  return alpha1(node) * std::pow(q(node), static_cast<double>(t - 1));
}

ScheduleValidation validate_schedules(const PenaltySchedule& schedule, long T) {
  ScheduleValidation result;
  auto flag = [&result](int node, long t, std::string condition) {
    result.ok = false;
    result.violations.push_back({node, t, std::move(condition)});
  };

  if (!(schedule.theta > 0.0)) {
    flag(-1, 0, "theta must be positive");
  }
  if (schedule.q.size() != schedule.eta1.size()) {
    flag(-1, 0, "eta1/q size mismatch");
    return result;
  }
  for (int i = 0; i < schedule.n_nodes(); ++i) {
    double prev = 0.0;
    for (long t = 1; t <= T; ++t) {
      const double eta = schedule.penalty_at(i, t);
      if (!std::isfinite(eta)) {
        flag(i, t, "eta not finite");
        break;
      }
      if (!(eta >= schedule.theta)) {
        flag(i, t, "eta below theta");
      }
      if (t > 1 && eta < prev) {
        flag(i, t, "eta decreasing");
      }
      prev = eta;
    }
  }
  return result;
}

}  // namespace padmm
