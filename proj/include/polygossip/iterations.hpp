#pragma once

// Averaging methods as step-wise iterators sharing one contract: build from
// (W or graph, xi), call step() once per synchronous round, read estimate().
// Iterators keep a reference to W or the graph, which must outlive them.

#include <vector>

#include <Eigen/Dense>

#include "polygossip/gossip_matrix.hpp"
#include "polygossip/orthopoly.hpp"

namespace polygossip {

class Iteration {
 public:
  virtual ~Iteration() = default;

  /// Advances one round.
  virtual void step() = 0;

  /// Current estimate x^t.
  const Eigen::VectorXd& estimate() const { return x_; }
  int round() const { return t_; }

 protected:
  explicit Iteration(const Eigen::VectorXd& xi) : x_(xi) {}
  Eigen::VectorXd x_;
  int t_ = 0;
};

/// x^{t+1} = W x^t. With lazy = true the matrix is (I + W)/2.
class SimpleGossip final : public Iteration {
 public:
  SimpleGossip(const GossipMatrix& w, const Eigen::VectorXd& xi, bool lazy = false);
  void step() override;

 private:
  const GossipMatrix& w_;
  bool lazy_;
  Eigen::VectorXd tmp_;
};

/// x^1 = W xi, x^{t+1} = omega W x^t + (1 - omega) x^{t-1}.
class ShiftRegister final : public Iteration {
 public:
  ShiftRegister(const GossipMatrix& w, const Eigen::VectorXd& xi, double omega);
  void step() override;
  double omega() const { return omega_; }

 private:
  const GossipMatrix& w_;
  double omega_;
  Eigen::VectorXd prev_, tmp_;
};

/// x^1 = a_0 W xi + b_0 xi, x^{t+1} = a_t W x^t + b_t x^t - c_t x^{t-1} for a
/// normalized recurrence (jacobi, jacobi_general, kesten_mckay, oracle tables).
class PolynomialIteration final : public Iteration {
 public:
  PolynomialIteration(const GossipMatrix& w, const Eigen::VectorXd& xi, Recurrence rec);
  void step() override;
  const Recurrence& recurrence() const { return rec_; }

 private:
  const GossipMatrix& w_;
  Recurrence rec_;
  Eigen::VectorXd prev_, tmp_;
};

/// Jacobi iteration with a spectral-gap estimate: runs the unnormalized gap
/// recurrence on y together with its value delta at 1 and outputs y / delta.
/// Both pairs are divided by delta_t after every step.
class JacobiGap final : public Iteration {
 public:
  JacobiGap(const GossipMatrix& w, const Eigen::VectorXd& xi, double d, double gamma);
  void step() override;

 private:
  const GossipMatrix& w_;
  Recurrence rec_;
  Eigen::VectorXd y_curr_, y_prev_, tmp_;
  double delta_curr_ = 1.0, delta_prev_ = 1.0;
};

/// Optimal polynomial iteration with coefficients from inner products of the
/// iterates. Once <x, x - W x> drops below 1e-13 |xi|^2 the remaining error
/// mass is exhausted: the estimate is set to its mean and held.
class ParameterFree final : public Iteration {
 public:
  ParameterFree(const GossipMatrix& w, const Eigen::VectorXd& xi);
  void step() override;
  bool finished() const { return finished_; }

 private:
  void check_finished();
  const GossipMatrix& w_;
  Eigen::VectorXd prev_, wx_, wprev_, next_;
  double threshold_;
  double energy_ = 0;       // <x, x - W x>
  double energy_prev_ = 0;  // same for x^{t-1}
  bool finished_ = false;
};

/// Edge-message form on an unweighted graph: per directed edge a count K and
/// running average M. Counts are rescaled by powers of two when they grow
/// large, which keeps integer counts exact.
class MessagePassing final : public Iteration {
 public:
  MessagePassing(const Graph& g, const Eigen::VectorXd& xi);
  void step() override;
  /// K on half-edge offset(v)+k, i.e. the message from v to neighbors(v)[k], times 2^-shift().
  const Eigen::VectorXd& counts() const { return k_; }
  int shift() const { return shift_; }

 private:
  void refresh_output();
  const Graph& g_;
  Eigen::VectorXd xi_;
  Eigen::VectorXi reverse_;  // half-edge v->w to half-edge w->v
  Eigen::VectorXd k_, m_, k_next_, m_next_;
  double unit_ = 1.0;  // 2^-shift, the scaled value of "1"
  int shift_ = 0;
};

/// Vertex form on a d-regular graph: L_{t+1} = 2 + (d-1) L_t, S^{t+1} = A S^t - (d-1) S^{t-1}, x = S / L.
class MessagePassingRegular final : public Iteration {
 public:
  MessagePassingRegular(const Graph& g, const Eigen::VectorXd& xi);
  void step() override;

 private:
  const Graph& g_;
  int d_;
  Eigen::VectorXd s_curr_, s_prev_, tmp_;
  double l_curr_ = 1.0, l_prev_ = 1.0;
  double unit_ = 1.0;
};

/// Ball averages over B_t(v). A lower-bound baseline rather than a gossip
/// method. Ball sums are tabulated up front for t <= horizon; stepping past
/// the horizon throws PreconditionError unless every ball has saturated.
class LocalAverage final : public Iteration {
 public:
  LocalAverage(const Graph& g, const Eigen::VectorXd& xi, int horizon);
  void step() override;

 private:
  int horizon_;
  int n_;
  std::vector<double> sums_;  // n x (horizon + 1), row-major by vertex
  std::vector<int> sizes_;
  bool saturated_ = false;
};

/// Exact ball averages (1/|B_t(v)|) sum_{w in B_t(v)} xi_w.
Eigen::VectorXd local_average_oracle(const Graph& g, const Eigen::VectorXd& xi, int t);

}  // namespace polygossip
