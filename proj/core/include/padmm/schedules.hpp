#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace padmm {

// Per-node geometric penalty schedule eta_i(t) = eta_i(1) * q_i^(t-1) plus the
// global dual step theta. Monotone nondecreasing schedules with
// eta_i(1) >= theta > 0 satisfy the convergence condition at every finite t.
struct PenaltySchedule {
  Eigen::VectorXd eta1;  // eta_i(1) per node
  Eigen::VectorXd q;     // geometric ratio per node
  double theta = 0.0;

  static PenaltySchedule uniform(int n_nodes, double eta1, double q, double theta);

  int n_nodes() const { return static_cast<int>(eta1.size()); }
  // t is 1-based.
  double penalty_at(int node, long t) const;
  Eigen::VectorXd penalties_at(long t) const;
};

// Per-node geometric noise-scale schedule alpha_i(t) = alpha_i(1) * q_i^(t-1).
struct NoiseSchedule {
  Eigen::VectorXd alpha1;
  Eigen::VectorXd q;

  static NoiseSchedule uniform(int n_nodes, double alpha1, double q);

  int n_nodes() const { return static_cast<int>(alpha1.size()); }
  double alpha_at(int node, long t) const;
};

struct ScheduleViolation {
  int node = 0;
  long t = 0;
  std::string condition;
};

struct ScheduleValidation {
  bool ok = true;
  std::vector<ScheduleViolation> violations;
};

// Checks eta_i(t+1) >= eta_i(t) >= theta > 0 and finiteness for all nodes and
// t <= T. Reports structured violations instead of throwing.
ScheduleValidation validate_schedules(const PenaltySchedule& schedule, long T);

}  // namespace padmm
