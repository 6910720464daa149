#include "padmm/model.hpp"

#include <cmath>

#include "padmm/errors.hpp"

namespace padmm {

LossEval LogisticLoss::eval(double z) const {
  if (!std::isfinite(z)) throw NonFinite("logistic_loss: non-finite input");
  LossEval out;
  if (z >= 0.0) {
    const double e = std::exp(-z);  // <= 1
    out.value = std::log1p(e);
    out.d1 = -e / (1.0 + e);
    out.d2 = e / ((1.0 + e) * (1.0 + e));
  } else {
    const double e = std::exp(z);  // < 1
    out.value = -z + std::log1p(e);
    out.d1 = -1.0 / (1.0 + e);
    out.d2 = e / ((1.0 + e) * (1.0 + e));
  }
  return out;
}

const Loss& logistic_loss_instance() {
  static const LogisticLoss instance;
  return instance;
}

LossEval logistic_loss(double z) { return logistic_loss_instance().eval(z); }

LabeledDataset LabeledDataset::create(Eigen::MatrixXd features,
                                      Eigen::VectorXd labels) {
  if (features.rows() != labels.size()) {
    throw DimensionMismatch("LabeledDataset: feature/label count mismatch");
  }
  if (!features.allFinite() || !labels.allFinite()) {
    throw NonFinite("LabeledDataset: non-finite entries");
  }
  for (Eigen::Index n = 0; n < features.rows(); ++n) {
    const double norm = features.row(n).norm();
    if (norm > 1.0 + 1e-12) {
      throw InvalidArgument("LabeledDataset: sample " + std::to_string(n) +
                            " violates the unit-norm cap (||x|| = " +
                            std::to_string(norm) + ")");
    }
    if (labels(n) != 1.0 && labels(n) != -1.0) {
      throw InvalidArgument("LabeledDataset: label at " + std::to_string(n) +
                            " is not +/-1");
    }
  }
  return LabeledDataset(std::move(features), std::move(labels));
}

LabeledDataset LabeledDataset::slice(int first, int last) const {
  if (first < 0 || last > size() || first > last) {
    throw InvalidArgument("LabeledDataset::slice: bad range");
  }
  const int count = last - first;
  return LabeledDataset(features_.middleRows(first, count),
                        labels_.segment(first, count));
}

namespace {

void validate_config(const LabeledDataset& data, const ErmConfig& cfg) {
  if (!(cfg.C > 0.0)) throw InvalidArgument("ErmConfig: C must be positive");
  if (cfg.rho < 0.0) throw InvalidArgument("ErmConfig: rho must be nonnegative");
  if (cfg.n_nodes < 1) throw InvalidArgument("ErmConfig: n_nodes must be >= 1");
  if (cfg.C > data.size() + 1e-12) {
    throw InvalidArgument("ErmConfig: C exceeds local sample count B_i");
  }
}

}  // namespace

ErmObjective::ErmObjective(const LabeledDataset& data, const ErmConfig& cfg,
                           const Loss& loss)
    : data_(data), cfg_(cfg), loss_(loss) {
  validate_config(data, cfg);
}

double ErmObjective::value(const Eigen::VectorXd& f) const {
  if (f.size() != data_.dim()) {
    throw DimensionMismatch("local_objective: classifier dimension mismatch");
  }
  const Eigen::VectorXd margins =
      data_.labels().cwiseProduct(data_.features() * f);
  double loss_sum = 0.0;
  for (Eigen::Index n = 0; n < margins.size(); ++n) {
    loss_sum += loss_.eval(margins(n)).value;
  }
  const double b = static_cast<double>(data_.size());
  return (cfg_.C / b) * loss_sum +
         (cfg_.rho / cfg_.n_nodes) * 0.5 * f.squaredNorm();
}

Eigen::VectorXd ErmObjective::gradient(const Eigen::VectorXd& f) const {
  if (f.size() != data_.dim()) {
    throw DimensionMismatch("local_gradient: classifier dimension mismatch");
  }
  const Eigen::VectorXd margins =
      data_.labels().cwiseProduct(data_.features() * f);
  Eigen::VectorXd weights(margins.size());
  for (Eigen::Index n = 0; n < margins.size(); ++n) {
    weights(n) = data_.label(static_cast<int>(n)) * loss_.eval(margins(n)).d1;
  }
  const double b = static_cast<double>(data_.size());
  return (cfg_.C / b) * (data_.features().transpose() * weights) +
         (cfg_.rho / cfg_.n_nodes) * f;
}

double local_objective(const Eigen::VectorXd& f, const LabeledDataset& data,
                       const ErmConfig& cfg) {
  return ErmObjective(data, cfg).value(f);
}

Eigen::VectorXd local_gradient(const Eigen::VectorXd& f,
                               const LabeledDataset& data,
                               const ErmConfig& cfg) {
  return ErmObjective(data, cfg).gradient(f);
}

CurvatureConstants curvature_constants(const std::vector<LabeledDataset>& datasets,
                                       const ErmConfig& cfg) {
  const int n = static_cast<int>(datasets.size());
  CurvatureConstants out;
  out.m = Eigen::VectorXd::Zero(n);
  out.M = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    validate_config(datasets[i], cfg);
    double max_sq = 0.0;
    for (int s = 0; s < datasets[i].size(); ++s) {
      max_sq = std::max(max_sq, datasets[i].features().row(s).squaredNorm());
    }
    out.m(i) = cfg.rho / cfg.n_nodes;
    out.M(i) = cfg.C * cfg.c1 * max_sq + cfg.rho / cfg.n_nodes;
  }
  out.m_o = n > 0 ? out.m.minCoeff() : 0.0;
  out.M_O = n > 0 ? out.M.maxCoeff() : 0.0;
  return out;
}

namespace {

// Centralized objective over the union of all shards (Eq. form with rho*R).
class CentralizedObjective final : public LocalObjective {
 public:
  CentralizedObjective(const std::vector<LabeledDataset>& datasets,
                       const ErmConfig& cfg)
      : datasets_(datasets), cfg_(cfg) {
    for (const auto& d : datasets) validate_config(d, cfg);
  }

  int dim() const override { return datasets_.front().dim(); }

  double value(const Eigen::VectorXd& f) const override {
    double total = 0.0;
    for (const auto& data : datasets_) {
      const Eigen::VectorXd margins = data.labels().cwiseProduct(data.features() * f);
      double loss_sum = 0.0;
      for (Eigen::Index n = 0; n < margins.size(); ++n) {
        loss_sum += logistic_loss_instance().eval(margins(n)).value;
      }
      total += (cfg_.C / data.size()) * loss_sum;
    }
    return total + cfg_.rho * 0.5 * f.squaredNorm();
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& f) const override {
    Eigen::VectorXd g = cfg_.rho * f;
    for (const auto& data : datasets_) {
      const Eigen::VectorXd margins = data.labels().cwiseProduct(data.features() * f);
      Eigen::VectorXd weights(margins.size());
      for (Eigen::Index n = 0; n < margins.size(); ++n) {
        weights(n) = data.label(static_cast<int>(n)) *
                     logistic_loss_instance().eval(margins(n)).d1;
      }
      g += (cfg_.C / data.size()) * (data.features().transpose() * weights);
    }
    return g;
  }

 private:
  const std::vector<LabeledDataset>& datasets_;
  ErmConfig cfg_;
};

}  // namespace

Eigen::VectorXd centralized_solve(const std::vector<LabeledDataset>& datasets,
                                  const ErmConfig& cfg, double tol,
                                  int max_iter) {
  if (datasets.empty()) throw InvalidArgument("centralized_solve: no datasets");
  if (!(cfg.rho > 0.0)) {
    throw InvalidArgument("centralized_solve: rho must be positive for a unique minimizer");
  }
  CentralizedObjective objective(datasets, cfg);
  MinimizeOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  const SolveReport report =
      minimize(objective, Eigen::VectorXd::Zero(objective.dim()), opts);
  if (!report.converged) {
    throw SolverDidNotConverge("centralized_solve: gradient norm " +
                               std::to_string(report.gradient_norm) +
                               " above tol after " +
                               std::to_string(report.iterations) + " iterations");
  }
  return report.solution;
}

}  // namespace padmm
