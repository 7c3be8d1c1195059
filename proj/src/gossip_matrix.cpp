#include "polygossip/gossip_matrix.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "polygossip/errors.hpp"

namespace polygossip {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::uniform_degree: return "uniform_degree";
    case MatrixKind::adjacency_over_d: return "adjacency_over_d";
    case MatrixKind::max_neighbor_degree: return "max_neighbor_degree";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  for (auto k : {MatrixKind::uniform_degree, MatrixKind::adjacency_over_d, MatrixKind::max_neighbor_degree})
    if (to_string(k) == name) return k;
  throw SpecificationError("unknown matrix kind '" + std::string(name) + "'");
}

GossipMatrix::GossipMatrix(Eigen::SparseMatrix<double, Eigen::RowMajor> w, bool unweighted_regular)
    : w_(std::move(w)), adjacency_over_d_(unweighted_regular) {
  w_.makeCompressed();
}

void GossipMatrix::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  if (x.size() != w_.cols()) throw PreconditionError("gossip matrix: dimension mismatch");
  y.resize(w_.rows());
  const int* outer = w_.outerIndexPtr();
  const int* inner = w_.innerIndexPtr();
  const double* val = w_.valuePtr();
  for (int r = 0; r < w_.rows(); ++r) {
    double s = 0;
    for (int k = outer[r]; k < outer[r + 1]; ++k) s += val[k] * x[inner[k]];
    y[r] = s;
  }
}

Eigen::VectorXd GossipMatrix::operator*(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y;
  apply(x, y);
  return y;
}

GossipMatrix build_gossip_matrix(const Graph& g, MatrixKind kind, int d_max_override) {
  const int n = g.vertex_count();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n + 2 * static_cast<size_t>(g.edge_count()));
  std::vector<double> diag(n, 1.0);

  auto add_edge = [&](Vertex u, Vertex w, double weight) {
    trip.emplace_back(u, w, weight);
    trip.emplace_back(w, u, weight);
    diag[u] -= weight;
    diag[w] -= weight;
  };

  switch (kind) {
    case MatrixKind::uniform_degree: {
      int dmax = g.max_degree();
      if (d_max_override != 0) {
        if (d_max_override < dmax)
          throw PreconditionError("d_max override " + std::to_string(d_max_override) +
                                  " is below the maximum degree " + std::to_string(dmax));
        dmax = d_max_override;
      }
      if (dmax > 0) {
        const double weight = 1.0 / dmax;
        for (auto [u, w] : g.edges()) add_edge(u, w, weight);
        // 1 - deg/dmax computed directly rather than by repeated subtraction.
        for (Vertex v = 0; v < n; ++v) diag[v] = static_cast<double>(dmax - g.degree(v)) / dmax;
      }
      break;
    }
    case MatrixKind::adjacency_over_d: {
      const int d = g.regular_degree();
      if (d < 0) throw PreconditionError("adjacency_over_d requires a regular graph");
      if (d > 0) {
        for (auto [u, w] : g.edges()) add_edge(u, w, 1.0 / d);
        std::fill(diag.begin(), diag.end(), 0.0);
      }
      break;
    }
    case MatrixKind::max_neighbor_degree: {
      for (auto [u, w] : g.edges()) add_edge(u, w, 1.0 / std::max(g.degree(u), g.degree(w)));
      for (double& x : diag) x = std::max(x, 0.0);
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (diag[v] != 0.0) trip.emplace_back(v, v, diag[v]);

  Eigen::SparseMatrix<double, Eigen::RowMajor> w(n, n);
  w.setFromTriplets(trip.begin(), trip.end());
  return GossipMatrix(std::move(w), kind == MatrixKind::adjacency_over_d);
}

}  // namespace polygossip
