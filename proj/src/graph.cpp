#include "polygossip/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "polygossip/errors.hpp"

namespace polygossip {

namespace {

using Edge = std::pair<Vertex, Vertex>;
using Rng = boost::random::mt19937_64;

std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

long long product(const std::vector<int>& dims) {
  long long n = 1;
  for (int s : dims) n *= s;
  return n;
}

// Lattice edges in row-major order; each edge appears once.
std::vector<Edge> lattice_edges(const std::vector<int>& dims, bool wrap) {
  const int n = static_cast<int>(product(dims));
  const auto strides = strides_of(dims);
  std::vector<Edge> out;
  std::vector<int> coord(dims.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    int rest = v;
    for (size_t k = 0; k < dims.size(); ++k) {
      coord[k] = rest / strides[k];
      rest %= strides[k];
    }
    for (size_t k = 0; k < dims.size(); ++k) {
      if (coord[k] + 1 < dims[k]) {
        out.emplace_back(v, v + strides[k]);
      } else if (wrap && dims[k] > 2) {
        out.emplace_back(v - coord[k] * strides[k], v);
      }
    }
  }
  return out;
}

std::vector<Edge> random_regular_edges(int n, int d, Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> s = stubs;
    for (size_t i = s.size(); i > 1; --i) {
      boost::random::uniform_int_distribution<size_t> pick(0, i - 1);
      std::swap(s[i - 1], s[pick(rng)]);
    }
    std::vector<Edge> edges;
    edges.reserve(s.size() / 2);
    bool simple = true;
    for (size_t i = 0; i < s.size(); i += 2) {
      Vertex u = std::min(s[i], s[i + 1]);
      Vertex w = std::max(s[i], s[i + 1]);
      if (u == w) {
        simple = false;
        break;
      }
      edges.emplace_back(u, w);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return edges;
  }
  throw SpecificationError("random_regular: no simple pairing after 1000 attempts");
}

std::vector<Edge> prufer_tree_edges(int n, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  boost::random::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  // Min-leaf decoding with a priority queue.
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--deg[c] == 1) leaves.push(c);
  }
  int u = leaves.top();
  leaves.pop();
  int w = leaves.top();
  edges.emplace_back(std::min(u, w), std::max(u, w));
  return edges;
}

std::vector<Edge> geometric_edges(int n, int dim, double radius, Rng& rng) {
  boost::random::uniform_01<double> unif;
  std::vector<double> pts(static_cast<size_t>(n) * dim);
  for (double& x : pts) x = unif(rng);
  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      double s = 0;
      for (int k = 0; k < dim; ++k) {
        double diff = pts[u * dim + k] - pts[w * dim + k];
        s += diff * diff;
      }
      if (s < r2) edges.emplace_back(u, w);
    }
  }
  return edges;
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw SpecificationError("negative vertex count");
  std::vector<int> deg(n, 0);
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= n || w >= n) throw SpecificationError("edge endpoint out of range");
    if (u == w) throw SpecificationError("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[w];
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.assign(g.offsets_[n], 0);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, w] : edges) {
    g.neighbors_[fill[u]++] = w;
    g.neighbors_[fill[w]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + g.offsets_[v];
    auto last = g.neighbors_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw SpecificationError("duplicate edge at vertex " + std::to_string(v));
  }
  return g;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < vertex_count(); ++v) m = std::max(m, degree(v));
  return m;
}

int Graph::regular_degree() const {
  const int n = vertex_count();
  if (n == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < n; ++v)
    if (degree(v) != d) return -1;
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : neighbors(v))
      if (v < w) out.emplace_back(v, w);
  return out;
}

bool Graph::is_valid() const {
  const int n = vertex_count();
  if (offsets_.empty() || offsets_[0] != 0 || offsets_.back() != static_cast<int>(neighbors_.size())) return false;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    for (size_t k = 0; k < nb.size(); ++k) {
      Vertex w = nb[k];
      if (w < 0 || w >= n || w == v) return false;
      if (k > 0 && nb[k - 1] >= w) return false;
      auto other = neighbors(w);
      if (!std::binary_search(other.begin(), other.end(), v)) return false;
    }
  }
  return true;
}

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::grid: return "grid";
    case GraphFamily::torus: return "torus";
    case GraphFamily::percolation_bond: return "percolation_bond";
    case GraphFamily::random_geometric: return "random_geometric";
    case GraphFamily::random_regular: return "random_regular";
    case GraphFamily::random_tree: return "random_tree";
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
  }
  return "?";
}

GraphFamily parse_graph_family(std::string_view name) {
  for (auto f : {GraphFamily::grid, GraphFamily::torus, GraphFamily::percolation_bond,
                 GraphFamily::random_geometric, GraphFamily::random_regular, GraphFamily::random_tree,
                 GraphFamily::path, GraphFamily::cycle, GraphFamily::complete})
    if (to_string(f) == name) return f;
  if (name == "percolation") return GraphFamily::percolation_bond;
  if (name == "rgg") return GraphFamily::random_geometric;
  if (name == "regular") return GraphFamily::random_regular;
  if (name == "tree") return GraphFamily::random_tree;
  throw SpecificationError("unknown graph family '" + std::string(name) + "'");
}

bool GraphSpec::is_random() const {
  switch (family) {
    case GraphFamily::percolation_bond:
    case GraphFamily::random_geometric:
    case GraphFamily::random_regular:
    case GraphFamily::random_tree:
      return true;
    default:
      return false;
  }
}

void GraphSpec::validate() const {
  switch (family) {
    case GraphFamily::grid:
    case GraphFamily::torus:
    case GraphFamily::percolation_bond: {
      if (dims.empty()) throw SpecificationError(std::string(to_string(family)) + ": dims required");
      for (int s : dims)
        if (s < 1) throw SpecificationError("side lengths must be positive");
      if (product(dims) > 50'000'000) throw SpecificationError("lattice too large");
      if (family == GraphFamily::percolation_bond && !(p >= 0.0 && p <= 1.0))
        throw SpecificationError("percolation_bond: p must lie in [0,1]");
      break;
    }
    case GraphFamily::random_geometric:
      if (n < 1) throw SpecificationError("random_geometric: n must be positive");
      if (d < 1) throw SpecificationError("random_geometric: ambient dimension d must be positive");
      if (!(radius > 0)) throw SpecificationError("random_geometric: radius must be positive");
      break;
    case GraphFamily::random_regular:
      if (n < 1 || d < 0) throw SpecificationError("random_regular: need n >= 1 and d >= 0");
      if (d >= n) throw SpecificationError("random_regular: need d < n");
      if ((static_cast<long long>(n) * d) % 2 != 0) throw SpecificationError("random_regular: n*d must be even");
      break;
    case GraphFamily::cycle:
      if (n != 1 && n < 3) throw SpecificationError("cycle: need n >= 3 (or n = 1)");
      break;
    case GraphFamily::random_tree:
    case GraphFamily::path:
    case GraphFamily::complete:
      if (n < 1) throw SpecificationError(std::string(to_string(family)) + ": n must be positive");
      break;
  }
}

Graph generate(const GraphSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  int n = spec.n;
  switch (spec.family) {
    case GraphFamily::grid:
    case GraphFamily::torus:
      n = static_cast<int>(product(spec.dims));
      edges = lattice_edges(spec.dims, spec.family == GraphFamily::torus);
      break;
    case GraphFamily::percolation_bond: {
      n = static_cast<int>(product(spec.dims));
      boost::random::uniform_01<double> unif;
      for (const Edge& e : lattice_edges(spec.dims, false))
        if (unif(rng) < spec.p) edges.push_back(e);
      break;
    }
    case GraphFamily::random_geometric:
      edges = geometric_edges(n, spec.d, spec.radius, rng);
      break;
    case GraphFamily::random_regular:
      edges = random_regular_edges(n, spec.d, rng);
      break;
    case GraphFamily::random_tree:
      edges = prufer_tree_edges(n, rng);
      break;
    case GraphFamily::path:
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case GraphFamily::cycle:
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      if (n >= 3) edges.emplace_back(0, n - 1);
      break;
    case GraphFamily::complete:
      for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) edges.emplace_back(u, w);
      break;
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Component label per vertex, labels assigned in order of smallest vertex.
std::vector<int> component_labels(const Graph& g, int& count) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

int component_count(const Graph& g) {
  int count = 0;
  component_labels(g, count);
  return count;
}

Component largest_component(const Graph& g) {
  const int n = g.vertex_count();
  int count = 0;
  const auto label = component_labels(g, count);
  Component out;
  out.old_to_new.assign(n, -1);
  if (n == 0) return out;
  std::vector<int> size(count, 0);
  for (int l : label) ++size[l];
  // Labels follow smallest vertex order, so max_element already breaks ties correctly.
  const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == best) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto [u, w] : g.edges())
    if (label[u] == best) edges.emplace_back(out.old_to_new[u], out.old_to_new[w]);
  out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

Balls balls(const Graph& g, Vertex v, int t_max) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("balls: vertex out of range");
  if (t_max < 0) throw PreconditionError("balls: t_max must be nonnegative");
  Balls out;
  std::vector<char> seen(g.vertex_count(), 0);
  seen[v] = 1;
  out.layers.push_back({v});
  out.sizes.push_back(1);
  for (int t = 1; t <= t_max; ++t) {
    std::vector<Vertex> next;
    for (Vertex u : out.layers.back())
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    out.sizes.push_back(out.sizes.back() + static_cast<int>(next.size()));
    out.layers.push_back(std::move(next));
  }
  return out;
}

double hausdorff_estimate(const Graph& g, Vertex v, int t_lo, int t_hi) {
  if (t_lo < 1 || t_hi < t_lo) throw EstimationError("hausdorff_estimate: need 1 <= t_lo <= t_hi");
  const Balls b = balls(g, v, t_hi);
  const double half = 0.5 * g.vertex_count();
  std::vector<double> xs, ys;
  for (int t = t_lo; t <= t_hi; ++t) {
    if (b.sizes[t] >= half) break;
    xs.push_back(std::log(static_cast<double>(t)));
    ys.push_back(std::log(static_cast<double>(b.sizes[t])));
  }
  if (xs.size() < 2) throw EstimationError("hausdorff_estimate: fewer than two radii before saturation");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

int diameter(const Graph& g) {
  const int n = g.vertex_count();
  int diam = 0;
  std::vector<int> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
    }
    if (static_cast<int>(tail) != n) throw PreconditionError("diameter: graph is disconnected");
    diam = std::max(diam, dist[queue[tail - 1]]);
  }
  return diam;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, w] : g.edges()) out << u << ' ' << w << '\n';
  if (!out) throw IoError("failed writing graph");
}

Graph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw IoError("graph header must be 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long k = 0; k < m; ++k) {
    long long u, w;
    if (!(in >> u >> w)) throw IoError("graph file truncated at edge " + std::to_string(k));
    if (u >= w) throw IoError("edge lines must satisfy u < v");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace polygossip
