#pragma once

#include <Eigen/Core>
#include <ostream>
#include <vector>

#include "padmm/graph.hpp"
#include "padmm/model.hpp"
#include "padmm/rng.hpp"
#include "padmm/schedules.hpp"

namespace padmm {

// Draws the penalty-perturbation noise with density proportional to
// exp(-alpha * ||eps||): the norm is Gamma(shape d, scale 1/alpha), sampled
// as a sum of d unit exponentials, and the direction is uniform on the unit
// sphere.
Eigen::VectorXd sample_penalty_noise(double alpha, int d, Rng& rng);

struct ThetaCheck {
  bool ok = true;
  std::vector<int> violating_nodes;
};

// Parameter condition from the private algorithm: for every node,
// 2*c1 < (B_i/C) * (rho/N + 2*theta*V_i), strictly. It bounds the worst-case
// privacy loss; convergence does not need it.
ThetaCheck check_theta_condition(double theta,
                                 const std::vector<LabeledDataset>& datasets,
                                 const ErmConfig& cfg, const Network& net);

// lambda + eta * V_i * eps. Perturbing the penalty term is equivalent to
// shifting the dual variable by this amount before a noiseless primal update.
Eigen::VectorXd dvp_dual_shift(const Eigen::VectorXd& lambda, double eta,
                               int n_neighbors, const Eigen::VectorXd& eps);

// Cumulative privacy-loss accountant. Per node and iteration the term is
//   C * (1.4*c1 + alpha_i(t)) / (eta_i(t) * V_i * B_i),
// beta is the maximum over nodes of the T-step sums, and P(t) the running
// network bound.
class PrivacyLedger {
 public:
  PrivacyLedger(std::vector<std::vector<double>> terms);

  int n_nodes() const { return static_cast<int>(terms_.size()); }
  long horizon() const { return terms_.empty() ? 0 : static_cast<long>(terms_[0].size()); }

  // Per-iteration terms for one node, index t-1.
  const std::vector<double>& terms(int node) const { return terms_.at(node); }
  // Running sum for one node after t iterations (t in [0, T]).
  double cumulative(int node, long t) const;
  // P(t) = max_i cumulative(i, t).
  double network_bound_at(long t) const;
  double beta() const { return network_bound_at(horizon()); }

  // CSV rows node,t,term,cumulative followed by a summary line "beta,<value>".
  void write_csv(std::ostream& os) const;

 private:
  std::vector<std::vector<double>> terms_;
  std::vector<std::vector<double>> cumulative_;
};

// Evaluates the accountant for the given schedules over horizon T.
// sample_sizes are the per-node B_i. Throws IsolatedNode if any V_i = 0.
PrivacyLedger privacy_bound(const PenaltySchedule& penalties,
                            const NoiseSchedule& noise, const ErmConfig& cfg,
                            const Network& net,
                            const std::vector<int>& sample_sizes, long T);

}  // namespace padmm
