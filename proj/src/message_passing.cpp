#include <algorithm>
#include <cmath>

#include "polygossip/errors.hpp"
#include "polygossip/iterations.hpp"

namespace polygossip {

namespace {

constexpr int kRescaleBits = 256;
const double kRescaleAbove = std::ldexp(1.0, kRescaleBits);

}  // namespace

MessagePassing::MessagePassing(const Graph& g, const Eigen::VectorXd& xi) : Iteration(xi), g_(g), xi_(xi) {
  if (xi.size() != g.vertex_count()) throw PreconditionError("signal length differs from vertex count");
  const int halves = 2 * g.edge_count();
  reverse_.resize(halves);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    for (size_t k = 0; k < nb.size(); ++k) {
      const Vertex w = nb[k];
      auto back = g.neighbors(w);
      const auto pos = std::lower_bound(back.begin(), back.end(), v) - back.begin();
      reverse_[g.half_edge_offset(v) + static_cast<int>(k)] = g.half_edge_offset(w) + static_cast<int>(pos);
    }
  }
  k_ = Eigen::VectorXd::Zero(halves);
  m_ = Eigen::VectorXd::Zero(halves);
  k_next_.resize(halves);
  m_next_.resize(halves);
}

void MessagePassing::step() {
  // Message v -> w collects the messages u -> v for u != w. The incoming
  // message u -> v sits at reverse_ of half-edge v -> u.
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    const int base = g_.half_edge_offset(v);
    const int deg = g_.degree(v);
    for (int j = 0; j < deg; ++j) {
      double count = unit_;
      double total = unit_ * xi_[v];
      for (int i = 0; i < deg; ++i) {
        if (i == j) continue;
        const int in = reverse_[base + i];
        count += k_[in];
        total += k_[in] * m_[in];
      }
      k_next_[base + j] = count;
      m_next_[base + j] = total / count;
    }
  }
  k_.swap(k_next_);
  m_.swap(m_next_);
  if (k_.size() > 0 && k_.maxCoeff() > kRescaleAbove) {
    k_ = k_ * std::ldexp(1.0, -kRescaleBits);
    unit_ = std::ldexp(unit_, -kRescaleBits);
    shift_ += kRescaleBits;
  }
  ++t_;
  refresh_output();
}

void MessagePassing::refresh_output() {
  for (Vertex v = 0; v < g_.vertex_count(); ++v) {
    const int base = g_.half_edge_offset(v);
    double count = unit_;
    double total = unit_ * xi_[v];
    for (int i = 0; i < g_.degree(v); ++i) {
      const int in = reverse_[base + i];
      count += k_[in];
      total += k_[in] * m_[in];
    }
    x_[v] = total / count;
  }
}

MessagePassingRegular::MessagePassingRegular(const Graph& g, const Eigen::VectorXd& xi)
    : Iteration(xi), g_(g), d_(g.regular_degree()), s_curr_(xi) {
  if (xi.size() != g.vertex_count()) throw PreconditionError("signal length differs from vertex count");
  if (d_ < 2) throw PreconditionError("vertex-form message passing needs a regular graph of degree >= 2");
}

void MessagePassingRegular::step() {
  const int n = g_.vertex_count();
  tmp_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    double s = 0;
    for (Vertex w : g_.neighbors(v)) s += s_curr_[w];
    tmp_[v] = s;
  }
  double l_next;
  if (t_ == 0) {
    tmp_ += s_curr_;
    l_next = 1.0 + d_;
  } else {
    tmp_ -= (d_ - 1.0) * s_prev_;
    l_next = 2.0 * unit_ + (d_ - 1.0) * l_curr_;
  }
  s_prev_.swap(s_curr_);
  s_curr_.swap(tmp_);
  l_prev_ = l_curr_;
  l_curr_ = l_next;
  if (l_curr_ > kRescaleAbove) {
    const double f = std::ldexp(1.0, -kRescaleBits);
    s_curr_ *= f;
    s_prev_ *= f;
    l_curr_ *= f;
    l_prev_ *= f;
    unit_ *= f;
  }
  x_ = s_curr_ / l_curr_;
  ++t_;
}

LocalAverage::LocalAverage(const Graph& g, const Eigen::VectorXd& xi, int horizon)
    : Iteration(xi), horizon_(horizon), n_(g.vertex_count()) {
  if (xi.size() != n_) throw PreconditionError("signal length differs from vertex count");
  if (horizon < 0) throw PreconditionError("local average horizon must be nonnegative");
  const size_t width = static_cast<size_t>(horizon) + 1;
  sums_.assign(static_cast<size_t>(n_) * width, 0.0);
  sizes_.assign(static_cast<size_t>(n_) * width, 0);
  std::vector<int> mark(n_, -1);
  std::vector<Vertex> frontier, next;
  saturated_ = true;
  for (Vertex v = 0; v < n_; ++v) {
    frontier.assign(1, v);
    mark[v] = v;
    double sum = xi[v];
    int size = 1;
    for (size_t t = 0; t < width; ++t) {
      if (t > 0) {
        next.clear();
        for (Vertex u : frontier)
          for (Vertex w : g.neighbors(u))
            if (mark[w] != v) {
              mark[w] = v;
              next.push_back(w);
            }
        // Sum in ascending vertex order so the result does not depend on BFS order.
        std::sort(next.begin(), next.end());
        for (Vertex w : next) sum += xi[w];
        size += static_cast<int>(next.size());
        frontier.swap(next);
      }
      sums_[v * width + t] = sum;
      sizes_[v * width + t] = size;
    }
    for (Vertex u : frontier)
      for (Vertex w : g.neighbors(u))
        if (mark[w] != v) saturated_ = false;
  }
}

void LocalAverage::step() {
  ++t_;
  if (t_ > horizon_) {
    if (!saturated_) throw PreconditionError("local average stepped past its horizon");
    return;
  }
  const size_t width = static_cast<size_t>(horizon_) + 1;
  for (Vertex v = 0; v < n_; ++v) x_[v] = sums_[v * width + t_] / sizes_[v * width + t_];
}

Eigen::VectorXd local_average_oracle(const Graph& g, const Eigen::VectorXd& xi, int t) {
  if (t < 0) throw PreconditionError("local_average_oracle: t must be nonnegative");
  if (xi.size() != g.vertex_count()) throw PreconditionError("signal length differs from vertex count");
  Eigen::VectorXd out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Balls b = balls(g, v, t);
    double s = 0;
    for (const auto& layer : b.layers)
      for (Vertex w : layer) s += xi[w];
    out[v] = s / b.sizes[t];
  }
  return out;
}

}  // namespace polygossip
