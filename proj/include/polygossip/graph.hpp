#pragma once

// Graph families used by the simulations, connected components, BFS balls
// and the text dump format.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polygossip {

using Vertex = int;

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted; vertices are 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds from an undirected edge list. Self-loops and duplicate edges are
  /// rejected with SpecificationError.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  int edge_count() const { return static_cast<int>(neighbors_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  /// Returns the common degree, or -1 when the graph is not regular.
  int regular_degree() const;

  /// Offset of v's first half-edge; half-edge offsets(v)+k points to neighbors(v)[k].
  int half_edge_offset(Vertex v) const { return offsets_[v]; }

  /// Undirected edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Symmetry, no self-loops, no duplicates, indices in range.
  bool is_valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<int> offsets_{0};
  std::vector<Vertex> neighbors_;
};

enum class GraphFamily {
  grid,
  torus,
  percolation_bond,
  random_geometric,
  random_regular,
  random_tree,
  path,
  cycle,
  complete,
};

std::string_view to_string(GraphFamily family);
GraphFamily parse_graph_family(std::string_view name);

/// Recipe for generate(). Fields not used by a family are ignored.
struct GraphSpec {
  GraphFamily family = GraphFamily::grid;
  std::vector<int> dims;  // side lengths for grid, torus, percolation_bond
  int n = 0;
  int d = 0;          // degree (random_regular) or ambient dimension (random_geometric)
  double p = 1.0;     // edge-keep probability (percolation_bond)
  double radius = 0;  // connection radius (random_geometric)
  std::uint64_t seed = 0;

  /// True for families whose output depends on the seed.
  bool is_random() const;
  void validate() const;
};

/// Deterministic given spec.seed. Grid-like families index vertices in
/// row-major order (last coordinate fastest). Percolation and random
/// geometric graphs may come out disconnected; see largest_component.
Graph generate(const GraphSpec& spec);

struct Component {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for dropped vertices
  std::vector<Vertex> new_to_old;
};

/// Induced subgraph on the largest connected component. Ties go to the
/// component holding the smallest vertex index. Vertex order is preserved.
Component largest_component(const Graph& g);

/// Number of connected components.
int component_count(const Graph& g);

struct Balls {
  std::vector<int> sizes;                    // |B_t(v)| for t = 0..t_max
  std::vector<std::vector<Vertex>> layers;   // vertices at distance exactly t
};

/// BFS layers around v up to radius t_max.
Balls balls(const Graph& g, Vertex v, int t_max);

/// Least-squares slope of ln|B_t(v)| against ln t over [t_lo, t_hi], using
/// only radii with |B_t| < n/2. Throws EstimationError with fewer than two
/// usable radii.
double hausdorff_estimate(const Graph& g, Vertex v, int t_lo, int t_hi);

/// Maximum eccentricity (over all vertices) of a connected graph.
int diameter(const Graph& g);

// Text format: first line "n m", then m lines "u v" with u < v.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace polygossip
