#pragma once

#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "polygossip/graph.hpp"

namespace polygossip {

enum class MatrixKind {
  uniform_degree,       // I + (A - D)/d_max
  adjacency_over_d,     // A/d, regular graphs only
  max_neighbor_degree,  // W_vw = 1/max(deg v, deg w), diagonal fills the row
};

std::string_view to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view name);

/// Symmetric nonnegative stochastic matrix supported on a graph. Each
/// off-diagonal weight is computed once per undirected edge, so the stored
/// matrix is exactly symmetric.
class GossipMatrix {
 public:
  GossipMatrix() = default;
  GossipMatrix(Eigen::SparseMatrix<double, Eigen::RowMajor> w, bool unweighted_regular);

  int size() const { return static_cast<int>(w_.rows()); }
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& sparse() const { return w_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(w_); }

  /// y = W x. Row-wise accumulation in stored order, so results are
  /// bit-reproducible.
  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
  Eigen::VectorXd operator*(const Eigen::VectorXd& x) const;

  /// True when W = A/d for a d-regular graph.
  bool is_adjacency_over_d() const { return adjacency_over_d_; }

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> w_;
  bool adjacency_over_d_ = false;
};

/// d_max_override applies to uniform_degree only and must be at least the
/// graph's maximum degree; 0 means "use the maximum degree".
GossipMatrix build_gossip_matrix(const Graph& g, MatrixKind kind, int d_max_override = 0);

}  // namespace polygossip
