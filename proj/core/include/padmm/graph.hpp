#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padmm {

// Undirected connected communication graph. Immutable after construction and
// safe to share read-only across workers.
class Network {
 public:
  // Validates indices, rejects self loops and duplicates, and requires
  // connectivity (checked by breadth-first traversal).
  static Network from_edges(int n_nodes,
                            const std::vector<std::pair<int, int>>& edges);

  static Network path(int n_nodes);
  static Network cycle(int n_nodes);
  static Network complete(int n_nodes);
  // Samples each pair independently with probability p; throws
  // DisconnectedGraph when the draw is not connected.
  static Network erdos_renyi(int n_nodes, double p, std::uint64_t seed);

  // Edge-list text format: one "i j" pair per line, 0-indexed. Lines starting
  // with '#' and blank lines are skipped.
  static Network load_edge_list(const std::string& path, int n_nodes);

  int n_nodes() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  // Normalized (i < j) edge pairs, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int node) const;
  int degree(int node) const;

  // D - A, built from integer degree/adjacency entries (column sums are
  // exactly zero).
  Eigen::MatrixXd laplacian() const;
  // D + A.
  Eigen::MatrixXd signless_laplacian() const;

 private:
  Network(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::vector<int>> neighbors)
      : n_(n), edges_(std::move(edges)), neighbors_(std::move(neighbors)) {}

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbors_;
};

// Extremes of the singular spectrum. sigma_min_nonzero excludes singular
// values below 1e-10 * sigma_max.
struct SpectralSummary {
  double sigma_min_nonzero = 0.0;
  double sigma_max = 0.0;
};

// Symmetric PSD square root: returns S with S*S == m to 1e-8 elementwise.
// Eigenvalues in [-1e-10, 0) are clamped to zero; below that throws NotPSD.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m);

// Singular-value extremes of an arbitrary (possibly nonsymmetric) matrix.
// Throws ZeroMatrix when every singular value is below 1e-12.
SpectralSummary spectral_bounds(const Eigen::MatrixXd& m);

}  // namespace padmm
