#include "polygossip/iterations.hpp"

#include "polygossip/errors.hpp"

namespace polygossip {

namespace {

void check_size(const GossipMatrix& w, const Eigen::VectorXd& xi) {
  if (xi.size() != w.size())
    throw PreconditionError("signal length " + std::to_string(xi.size()) + " differs from matrix size " +
                            std::to_string(w.size()));
}

}  // namespace

SimpleGossip::SimpleGossip(const GossipMatrix& w, const Eigen::VectorXd& xi, bool lazy)
    : Iteration(xi), w_(w), lazy_(lazy) {
  check_size(w, xi);
}

void SimpleGossip::step() {
  w_.apply(x_, tmp_);
  if (lazy_)
    x_ = 0.5 * (x_ + tmp_);
  else
    x_.swap(tmp_);
  ++t_;
}

ShiftRegister::ShiftRegister(const GossipMatrix& w, const Eigen::VectorXd& xi, double omega)
    : Iteration(xi), w_(w), omega_(omega) {
  check_size(w, xi);
  if (!(omega >= 1.0 && omega <= 2.0)) throw DomainError("shift_register: omega must lie in [1, 2]");
}

void ShiftRegister::step() {
  w_.apply(x_, tmp_);
  if (t_ == 0) {
    prev_ = x_;
    x_ = tmp_;
  } else {
    tmp_ = omega_ * tmp_ + (1.0 - omega_) * prev_;
    prev_.swap(x_);
    x_.swap(tmp_);
  }
  ++t_;
}

PolynomialIteration::PolynomialIteration(const GossipMatrix& w, const Eigen::VectorXd& xi, Recurrence rec)
    : Iteration(xi), w_(w), rec_(std::move(rec)) {
  check_size(w, xi);
  if (!rec_.normalized()) throw PreconditionError("polynomial iteration needs a normalized recurrence");
}

void PolynomialIteration::step() {
  const auto k = rec_(t_);
  w_.apply(x_, tmp_);
  if (t_ == 0) {
    tmp_ = k.a * tmp_ + k.b * x_;
  } else {
    tmp_ = k.a * tmp_ + k.b * x_ - k.c * prev_;
  }
  prev_.swap(x_);
  x_.swap(tmp_);
  ++t_;
}

JacobiGap::JacobiGap(const GossipMatrix& w, const Eigen::VectorXd& xi, double d, double gamma)
    : Iteration(xi), w_(w), rec_(jacobi_gap_recurrence(d, gamma)), y_curr_(xi) {
  check_size(w, xi);
}

void JacobiGap::step() {
  const auto k = rec_(t_);
  w_.apply(y_curr_, tmp_);
  double delta_next;
  if (t_ == 0) {
    tmp_ = k.a * tmp_ + k.b * y_curr_;
    delta_next = k.a + k.b;
  } else {
    tmp_ = k.a * tmp_ + k.b * y_curr_ - k.c * y_prev_;
    delta_next = (k.a + k.b) * delta_curr_ - k.c * delta_prev_;
  }
  y_prev_.swap(y_curr_);
  y_curr_.swap(tmp_);
  delta_prev_ = delta_curr_;
  delta_curr_ = delta_next;

  const double s = 1.0 / delta_curr_;
  y_curr_ *= s;
  y_prev_ *= s;
  delta_prev_ *= s;
  delta_curr_ = 1.0;
  x_ = y_curr_;
  ++t_;
}

ParameterFree::ParameterFree(const GossipMatrix& w, const Eigen::VectorXd& xi) : Iteration(xi), w_(w) {
  check_size(w, xi);
  threshold_ = 1e-13 * xi.squaredNorm();
  w_.apply(x_, wx_);
  energy_ = x_.dot(x_ - wx_);
  check_finished();
}

void ParameterFree::check_finished() {
  if (finished_ || energy_ >= threshold_) return;
  finished_ = true;
  if (x_.size() > 0) x_.setConstant(x_.mean());
}

void ParameterFree::step() {
  ++t_;
  if (finished_) return;
  const Eigen::VectorXd r = x_ - wx_;
  const double b = -r.dot(wx_) / energy_;
  if (t_ == 1) {
    next_ = (wx_ + b * x_) / (1.0 + b);
  } else {
    // <lambda pi_t, pi_{t-1}>_tau = <W x^t, x^{t-1} - W x^{t-1}>
    const double c = wx_.dot(prev_ - wprev_) / energy_prev_;
    next_ = (wx_ + b * x_ - c * prev_) / (1.0 + b - c);
  }
  prev_.swap(x_);
  wprev_.swap(wx_);
  x_.swap(next_);
  energy_prev_ = energy_;
  w_.apply(x_, wx_);
  energy_ = x_.dot(x_ - wx_);
  check_finished();
}

}  // namespace polygossip
