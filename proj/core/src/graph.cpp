#include "padmm/graph.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "padmm/errors.hpp"
#include "padmm/rng.hpp"

namespace padmm {

Network Network::from_edges(int n_nodes,
                            const std::vector<std::pair<int, int>>& edges) {
  if (n_nodes <= 0) throw InvalidArgument("Network: n_nodes must be positive");

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n_nodes || b < 0 || b >= n_nodes) {
      throw InvalidEdge("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") out of range for N=" + std::to_string(n_nodes));
    }
    if (a == b) {
      throw InvalidEdge("self edge at node " + std::to_string(a));
    }
    const auto e = std::minmax(a, b);
    if (!seen.insert(e).second) {
      throw InvalidEdge("duplicate edge (" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ")");
    }
    normalized.push_back(e);
  }
  std::sort(normalized.begin(), normalized.end());

  std::vector<std::vector<int>> neighbors(n_nodes);
  for (const auto& [i, j] : normalized) {
    neighbors[i].push_back(j);
    neighbors[j].push_back(i);
  }
  for (auto& list : neighbors) std::sort(list.begin(), list.end());

  // Connectivity check; a single node is trivially connected.
  if (n_nodes > 1) {
    std::vector<char> visited(n_nodes, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : neighbors[u]) {
        if (!visited[v]) {
          visited[v] = 1;
          ++reached;
          queue.push_back(v);
        }
      }
    }
    if (reached != n_nodes) {
      throw DisconnectedGraph("network has unreachable nodes (" +
                              std::to_string(n_nodes - reached) + " of " +
                              std::to_string(n_nodes) + ")");
    }
  }

  return Network(n_nodes, std::move(normalized), std::move(neighbors));
}

Network Network::path(int n_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n_nodes; ++i) edges.emplace_back(i, i + 1);
  return from_edges(n_nodes, edges);
}

Network Network::cycle(int n_nodes) {
  if (n_nodes < 3) throw InvalidArgument("cycle requires at least 3 nodes");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_nodes; ++i) edges.emplace_back(i, (i + 1) % n_nodes);
  return from_edges(n_nodes, edges);
}

Network Network::complete(int n_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_nodes; ++i)
    for (int j = i + 1; j < n_nodes; ++j) edges.emplace_back(i, j);
  return from_edges(n_nodes, edges);
}

Network Network::erdos_renyi(int n_nodes, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidArgument("erdos_renyi: p must be in [0,1]");
  Rng rng(Rng::derive(seed, {kTopologyStream}));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_nodes; ++i)
    for (int j = i + 1; j < n_nodes; ++j)
      if (rng.uniform01() <= p) edges.emplace_back(i, j);
  return from_edges(n_nodes, edges);
}

Network Network::load_edge_list(const std::string& path, int n_nodes) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int a = 0, b = 0;
    if (!(ls >> a >> b)) throw IoError("malformed edge line: '" + line + "'");
    edges.emplace_back(a, b);
  }
  return from_edges(n_nodes, edges);
}

const std::vector<int>& Network::neighbors(int node) const {
  if (node < 0 || node >= n_) throw InvalidArgument("neighbors: node out of range");
  return neighbors_[node];
}

int Network::degree(int node) const {
  return static_cast<int>(neighbors(node).size());
}

Eigen::MatrixXd Network::laplacian() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) l(i, i) = static_cast<double>(degree(i));
  for (const auto& [i, j] : edges_) {
    l(i, j) = -1.0;
    l(j, i) = -1.0;
  }
  return l;
}

Eigen::MatrixXd Network::signless_laplacian() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) l(i, i) = static_cast<double>(degree(i));
  for (const auto& [i, j] : edges_) {
    l(i, j) = 1.0;
    l(j, i) = 1.0;
  }
  return l;
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw NotSymmetric("psd_sqrt: matrix is not square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw NotSymmetric("psd_sqrt: asymmetry " + std::to_string(asym) +
                       " exceeds tolerance 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  Eigen::VectorXd evs = es.eigenvalues();
  for (Eigen::Index i = 0; i < evs.size(); ++i) {
    if (evs(i) < -1e-10) {
      throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(evs(i)) +
                   " below -1e-10");
    }
    evs(i) = evs(i) > 0.0 ? std::sqrt(evs(i)) : 0.0;
  }
  return es.eigenvectors() * evs.asDiagonal() * es.eigenvectors().transpose();
}

SpectralSummary spectral_bounds(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  if (sigma_max < 1e-12) throw ZeroMatrix("spectral_bounds: matrix is numerically zero");
  const double cutoff = 1e-10 * sigma_max;
  double sigma_min_nonzero = sigma_max;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) sigma_min_nonzero = sv(i);
  }
  return {sigma_min_nonzero, sigma_max};
}

}  // namespace padmm
