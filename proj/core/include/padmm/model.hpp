#pragma once

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "padmm/inner_solver.hpp"

namespace padmm {

struct LossEval {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Margin loss L(z) with first and second derivatives. The private mechanisms
// require |L'| <= 1 and 0 < L'' <= c1; the solver itself does not.
class Loss {
 public:
  virtual ~Loss() = default;
  virtual LossEval eval(double z) const = 0;
};

// log(1 + exp(-z)) evaluated through the overflow-safe identity
// log(1+e^-z) = max(0,-z) + log(1+e^-|z|). |L'| <= 1, 0 < L'' <= 1/4.
class LogisticLoss final : public Loss {
 public:
  LossEval eval(double z) const override;
};

const Loss& logistic_loss_instance();

// Convenience wrapper matching the scalar operation shape.
LossEval logistic_loss(double z);

// Per-node training set: rows of `features` are samples. Construction
// enforces the unit-norm cap ||x|| <= 1 + 1e-12 and labels in {-1, +1}.
class LabeledDataset {
 public:
  static LabeledDataset create(Eigen::MatrixXd features, Eigen::VectorXd labels);

  int size() const { return static_cast<int>(features_.rows()); }
  int dim() const { return static_cast<int>(features_.cols()); }
  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& labels() const { return labels_; }
  Eigen::VectorXd sample(int n) const { return features_.row(n).transpose(); }
  double label(int n) const { return labels_(n); }

  // Dataset with rows [first, last) of this one.
  LabeledDataset slice(int first, int last) const;

 private:
  LabeledDataset(Eigen::MatrixXd f, Eigen::VectorXd l)
      : features_(std::move(f)), labels_(std::move(l)) {}

  Eigen::MatrixXd features_;  // B x d
  Eigen::VectorXd labels_;    // B, entries +/-1
};

struct ErmConfig {
  double C = 1.0;      // loss weight, C <= min_i B_i
  double rho = 1.0;    // regularization weight
  int n_nodes = 1;
  double c1 = 0.25;    // bound on L'' (1/4 for logistic)
};

// Per-node strong convexity / gradient Lipschitz constants and their network
// extremes. For the shipped instance m_i = rho/N (the regularizer alone) and
// M_i = C*c1*max_n ||x_i^n||^2 + rho/N.
struct CurvatureConstants {
  Eigen::VectorXd m;  // per node
  Eigen::VectorXd M;  // per node
  double m_o = 0.0;   // min_i m_i
  double M_O = 0.0;   // max_i M_i
};

// O(f, D_i) = (C/B_i) sum_n L(y_i^n f^T x_i^n) + (rho/N) * (1/2)||f||^2.
class ErmObjective final : public LocalObjective {
 public:
  ErmObjective(const LabeledDataset& data, const ErmConfig& cfg,
               const Loss& loss = logistic_loss_instance());

  int dim() const override { return data_.dim(); }
  double value(const Eigen::VectorXd& f) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& f) const override;

 private:
  const LabeledDataset& data_;
  ErmConfig cfg_;
  const Loss& loss_;
};

double local_objective(const Eigen::VectorXd& f, const LabeledDataset& data,
                       const ErmConfig& cfg);
Eigen::VectorXd local_gradient(const Eigen::VectorXd& f,
                               const LabeledDataset& data, const ErmConfig& cfg);

CurvatureConstants curvature_constants(const std::vector<LabeledDataset>& datasets,
                                       const ErmConfig& cfg);

// Minimizer of the centralized ERM objective
// O_ERM(f) = sum_i (C/B_i) sum_n L(y f^T x) + rho * (1/2)||f||^2,
// solved to ||grad|| <= tol. Requires rho > 0.
Eigen::VectorXd centralized_solve(const std::vector<LabeledDataset>& datasets,
                                  const ErmConfig& cfg, double tol,
                                  int max_iter = 200000);

}  // namespace padmm
