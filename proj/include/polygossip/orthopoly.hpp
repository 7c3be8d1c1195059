#pragma once

// Recurrence coefficients for the polynomial gossip families, three-term
// evaluation, Chebyshev and shift-register closed forms, the Kesten-McKay
// density, and an orthogonalization oracle for discrete measures.

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polygossip/spectral.hpp"

namespace polygossip {

template <class T>
struct Coeffs {
  T a{}, b{}, c{};
};

// Coefficient formulas are templates so the same text runs in double and in
// exact rational arithmetic (boost::multiprecision::cpp_rational).

/// Jacobi coefficients in the "d" parametrization used by the gossip iteration
/// (equivalent to alpha = d/2, beta = 0). c is zero at t = 0.
template <class T>
Coeffs<T> jacobi_coeffs(const T& d, int t) {
  const T one(1), two(2);
  const T h = d / two;
  if (t == 0) return {(d + T(4)) / (two * (two + d)), d / (two * (two + d)), T(0)};
  const T tt(t);
  const T p = two * tt + h;      // 2t + d/2
  const T q = tt + one + h;      // t + 1 + d/2
  Coeffs<T> r;
  r.a = (p + one) * (p + two) / (two * q * q);
  r.b = d * d * (p + one) / (T(8) * q * q * p);
  r.c = tt * tt * (p + two) / (q * q * p);
  return r;
}

template <class T>
Coeffs<T> jacobi_general_coeffs(const T& alpha, const T& beta, int t) {
  const T one(1), two(2);
  const T s = alpha + beta;
  if (t == 0) return {(s + two) / (two * (one + alpha)), (alpha - beta) / (two * (one + alpha)), T(0)};
  const T tt(t);
  const T p = two * tt + s;
  Coeffs<T> r;
  r.a = (p + one) * (p + two) / (two * (tt + one + s) * (tt + one + alpha));
  r.b = (p + one) * s * (alpha - beta) / (two * (tt + one + s) * (tt + one + alpha) * p);
  r.c = tt * (tt + beta) * (p + two) / ((tt + one + s) * p * (tt + one + alpha));
  return r;
}

/// Message-passing recurrence on d-regular graphs. The closed form divides by
/// zero-valued expressions when d = 2, so d = 2 uses the equivalent ratio form
/// a_t = d L_t / L_{t+1}, c_t = (d-1) L_{t-1} / L_{t+1} with L_{t+1} = 2 + (d-1) L_t.
template <class T>
Coeffs<T> kesten_mckay_coeffs(int d, int t) {
  const T dd(d), one(1), two(2);
  if (t == 0) return {dd / (dd + one), one / (dd + one), T(0)};
  if (d == 2) {
    const T tt(t);
    return {two * (two * tt + one) / (two * tt + T(3)), T(0), (two * tt - one) / (two * tt + T(3))};
  }
  T inv_t = one;  // (d-1)^{-t}
  for (int k = 0; k < t; ++k) inv_t /= (dd - one);
  const T inv_t1 = inv_t / (dd - one);
  const T den = one - (two / dd) * inv_t1;
  return {(dd / (dd - one) - two * inv_t1) / den, T(0), (one / (dd - one) - (two / dd) * inv_t) / den};
}

/// Sequence of coefficient triples (a_t, b_t, c_t), c_0 = 0.
class Recurrence {
 public:
  using Fn = std::function<Coeffs<double>(int)>;
  Recurrence() = default;
  Recurrence(std::string label, Fn fn, bool normalized, int max_degree = -1)
      : label_(std::move(label)), fn_(std::move(fn)), normalized_(normalized), max_t_(max_degree) {}

  Coeffs<double> operator()(int t) const;
  const std::string& label() const { return label_; }

  /// True when pi_t(1) = 1 is built into the coefficients.
  bool normalized() const { return normalized_; }

  /// Largest t with coefficients available, or -1 for unbounded.
  int max_t() const { return max_t_; }

 private:
  std::string label_;
  Fn fn_;
  bool normalized_ = true;
  int max_t_ = -1;
};

Recurrence jacobi_recurrence(double d);
Recurrence jacobi_general_recurrence(double alpha, double beta);
Recurrence kesten_mckay_recurrence(int d);

/// Gap variant: a/(1 - g/2), b + (g/2) a/(1 - g/2), c, built from jacobi(d).
/// Not normalized; delta_t below is its value at lambda = 1.
Recurrence jacobi_gap_recurrence(double d, double gamma);

/// delta_0..delta_t_max for a recurrence: delta_{t+1} = (a_t + b_t) delta_t - c_t delta_{t-1}.
std::vector<double> normalization_tracker(const Recurrence& rec, int t_max);

/// pi_t(lambda) via the three-term recurrence.
double evaluate_recurrence(const Recurrence& rec, double lambda, int t);

/// pi_t(lambda) / pi_t(1); equals evaluate_recurrence for normalized recurrences.
double evaluate_normalized(const Recurrence& rec, double lambda, int t);

/// Roots of pi_t as eigenvalues of the symmetrized tridiagonal matrix.
Eigen::VectorXd recurrence_roots(const Recurrence& rec, int t);

enum class ChebyshevKind { first, second };
double chebyshev(int t, double lambda, ChebyshevKind kind);

/// 2/(1 + sqrt(g(1 - g/4))), the stable form of 2(1 - sqrt(g(1-g/4)))/(1-g/2)^2.
double shift_register_omega(double gamma);

/// Per-step asymptotic rate of tuned shift-register gossip.
double shift_register_rate(double gamma);

/// Closed form through Chebyshev polynomials for omega > 1; lambda^t when omega <= 1.
double shift_register_poly(double omega, int t, double lambda);

/// Same polynomial from x_{t+1} = omega lambda x_t + (1 - omega) x_{t-1}.
double shift_register_poly_by_recursion(double omega, int t, double lambda);

/// Density d/(2 pi (1 - l^2)) sqrt(4(d-1)/d^2 - l^2), zero off its support.
double kesten_mckay_density(int d, double lambda);

/// Half-width 2 sqrt(d-1)/d of the Kesten-McKay support.
double kesten_mckay_edge(int d);

struct OraclePolynomials {
  DiscreteMeasure sigma;                // support points with nonzero (1 - lambda) weight
  std::vector<Eigen::VectorXd> monomial;  // pi_t coefficients, lowest degree first
  std::vector<Eigen::VectorXd> values;    // pi_t at sigma.points
  std::vector<Coeffs<double>> coeffs;     // a_t, b_t, c_t for t < degree count - 1
  int perfect_degree = -1;              // degree of the polynomial vanishing on the support, when included

  int max_degree() const { return static_cast<int>(monomial.size()) - 1; }
  Recurrence recurrence() const;
  /// Evaluation through the extracted recurrence.
  double evaluate(int t, double lambda) const;
  /// Evaluation through the monomial coefficients (Horner).
  double evaluate_monomial(int t, double lambda) const;
  /// <P, Q>_tau = sum (1 - lambda_i) w_i P(lambda_i) Q(lambda_i).
  double tau_inner(int s, int t) const;
};

/// Orthogonal polynomials for tau = (1 - lambda) sigma with pi_t(1) = 1, for
/// t <= t_max. The basis is grown by modified Gram-Schmidt (two passes) on the
/// Krylov candidates lambda * pi_t, which span the same spaces as the monomials.
/// When t_max reaches the number T of support points below 1, pi_T is the
/// polynomial vanishing on all of them and degrees beyond T are dropped.
/// Throws DomainError when sigma has no mass away from lambda = 1.
OraclePolynomials oracle_from_measure(const DiscreteMeasure& sigma, int t_max);

/// Discretized sigma whose tau is the Jacobi weight (1 - l)^alpha (1 + l)^beta.
DiscreteMeasure jacobi_weight_measure(double alpha, double beta, int nodes = 2048);

/// Discretized Kesten-McKay density (d >= 3).
DiscreteMeasure kesten_mckay_measure(int d, int nodes = 2048);

}  // namespace polygossip
