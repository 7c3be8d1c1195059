#include "polygossip/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "polygossip/errors.hpp"
#include "polygossip/quadrature.hpp"

namespace polygossip {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

Coeffs<double> Recurrence::operator()(int t) const {
  if (t < 0) throw DomainError("recurrence index must be nonnegative");
  if (max_t_ >= 0 && t > max_t_)
    throw DomainError(label_ + ": coefficients only available up to t = " + std::to_string(max_t_));
  return fn_(t);
}

Recurrence jacobi_recurrence(double d) {
  if (!(d > 0)) throw DomainError("jacobi: d must be positive");
  return {"jacobi:d=" + fmt(d), [d](int t) { return jacobi_coeffs<double>(d, t); }, true};
}

Recurrence jacobi_general_recurrence(double alpha, double beta) {
  if (!(alpha > -1) || !(beta > -1)) throw DomainError("jacobi_general: need alpha, beta > -1");
  return {"jacobi_general:alpha=" + fmt(alpha) + ":beta=" + fmt(beta),
          [alpha, beta](int t) { return jacobi_general_coeffs<double>(alpha, beta, t); }, true};
}

Recurrence kesten_mckay_recurrence(int d) {
  if (d < 2) throw DomainError("kesten_mckay: need d >= 2");
  return {"kesten_mckay:d=" + std::to_string(d), [d](int t) { return kesten_mckay_coeffs<double>(d, t); }, true};
}

Recurrence jacobi_gap_recurrence(double d, double gamma) {
  if (!(d > 0)) throw DomainError("jacobi_gap: d must be positive");
  if (!(gamma > 0 && gamma < 2)) throw DomainError("jacobi_gap: gamma must lie in (0, 2)");
  const double scale = 1.0 / (1.0 - gamma / 2);
  return {"jacobi_gap:d=" + fmt(d) + ":gamma=" + fmt(gamma),
          [d, gamma, scale](int t) {
            auto k = jacobi_coeffs<double>(d, t);
            return Coeffs<double>{k.a * scale, k.b + (gamma / 2) * scale * k.a, k.c};
          },
          false};
}

std::vector<double> normalization_tracker(const Recurrence& rec, int t_max) {
  std::vector<double> delta{1.0};
  if (t_max < 1) return delta;
  auto k0 = rec(0);
  delta.push_back(k0.a + k0.b);
  for (int t = 1; t < t_max; ++t) {
    auto k = rec(t);
    delta.push_back((k.a + k.b) * delta[t] - k.c * delta[t - 1]);
  }
  return delta;
}

double evaluate_recurrence(const Recurrence& rec, double lambda, int t) {
  if (t < 0) throw DomainError("evaluate_recurrence: t must be nonnegative");
  if (t == 0) return 1.0;
  auto k0 = rec(0);
  double prev = 1.0, curr = k0.a * lambda + k0.b;
  for (int s = 1; s < t; ++s) {
    auto k = rec(s);
    double next = (k.a * lambda + k.b) * curr - k.c * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double evaluate_normalized(const Recurrence& rec, double lambda, int t) {
  if (rec.normalized()) return evaluate_recurrence(rec, lambda, t);
  // Evaluate numerator and normalizer together, rescaling to avoid overflow.
  if (t == 0) return 1.0;
  auto k0 = rec(0);
  double yp = 1.0, yc = k0.a * lambda + k0.b;
  double dp = 1.0, dc = k0.a + k0.b;
  for (int s = 1; s < t; ++s) {
    auto k = rec(s);
    double yn = (k.a * lambda + k.b) * yc - k.c * yp;
    double dn = (k.a + k.b) * dc - k.c * dp;
    yp = yc / dn;
    dp = dc / dn;
    yc = yn / dn;
    dc = 1.0;
  }
  return yc / dc;
}

Eigen::VectorXd recurrence_roots(const Recurrence& rec, int t) {
  if (t < 1) return {};
  Eigen::VectorXd diag(t), off(t > 1 ? t - 1 : 0);
  for (int k = 0; k < t; ++k) {
    auto c = rec(k);
    diag[k] = -c.b / c.a;
    if (k + 1 < t) {
      auto cn = rec(k + 1);
      const double prod = (1.0 / c.a) * (cn.c / cn.a);
      if (!(prod > 0)) throw DomainError("recurrence_roots: recurrence is not of orthogonal type");
      off[k] = std::sqrt(prod);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double chebyshev(int t, double lambda, ChebyshevKind kind) {
  if (t < 0) throw DomainError("chebyshev: t must be nonnegative");
  if (t == 0) return 1.0;
  double prev = 1.0;
  double curr = kind == ChebyshevKind::first ? lambda : 2.0 * lambda;
  for (int s = 1; s < t; ++s) {
    double next = 2.0 * lambda * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double shift_register_omega(double gamma) {
  if (!(gamma > 0 && gamma < 2)) throw DomainError("shift_register_omega: gamma must lie in (0, 2)");
  // 1 - g(1 - g/4) = (1 - g/2)^2, so the printed ratio simplifies to 2/(1 + s).
  return 2.0 / (1.0 + std::sqrt(gamma * (1.0 - gamma / 4)));
}

double shift_register_rate(double gamma) {
  if (!(gamma > 0 && gamma < 1)) throw DomainError("shift_register_rate: gamma must lie in (0, 1)");
  return 1.0 - 2.0 * (std::sqrt(gamma * (1.0 - gamma / 4)) - gamma / 2) / (1.0 - gamma);
}

double shift_register_poly(double omega, int t, double lambda) {
  if (t < 0) throw DomainError("shift_register_poly: t must be nonnegative");
  if (omega <= 1.0) return std::pow(lambda, t);
  if (omega > 2.0) throw DomainError("shift_register_poly: omega must lie in (1, 2]");
  const double r = std::sqrt(omega - 1.0);
  const double z = omega * lambda / (2.0 * r);
  return std::pow(r, t) * ((2.0 - 2.0 / omega) * chebyshev(t, z, ChebyshevKind::first) +
                           (2.0 / omega - 1.0) * chebyshev(t, z, ChebyshevKind::second));
}

double shift_register_poly_by_recursion(double omega, int t, double lambda) {
  if (t < 0) throw DomainError("shift_register_poly: t must be nonnegative");
  if (t == 0) return 1.0;
  double prev = 1.0, curr = lambda;
  for (int s = 1; s < t; ++s) {
    double next = omega * lambda * curr + (1.0 - omega) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double kesten_mckay_edge(int d) {
  if (d < 3) throw DomainError("kesten_mckay density needs d >= 3");
  return 2.0 * std::sqrt(d - 1.0) / d;
}

double kesten_mckay_density(int d, double lambda) {
  const double edge = kesten_mckay_edge(d);
  if (std::abs(lambda) >= edge) return 0.0;
  const double inner = 4.0 * (d - 1.0) / (static_cast<double>(d) * d) - lambda * lambda;
  return d / (2.0 * std::numbers::pi * (1.0 - lambda * lambda)) * std::sqrt(std::max(inner, 0.0));
}

Recurrence OraclePolynomials::recurrence() const {
  auto table = coeffs;
  return {"oracle", [table](int t) { return table[t]; }, true, static_cast<int>(table.size()) - 1};
}

double OraclePolynomials::evaluate(int t, double lambda) const {
  if (t < 0 || t > max_degree()) throw DomainError("oracle degree out of range");
  return evaluate_recurrence(recurrence(), lambda, t);
}

double OraclePolynomials::evaluate_monomial(int t, double lambda) const {
  if (t < 0 || t > max_degree()) throw DomainError("oracle degree out of range");
  const Eigen::VectorXd& c = monomial[t];
  double s = 0;
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) s = s * lambda + c[k];
  return s;
}

double OraclePolynomials::tau_inner(int s, int t) const {
  return (sigma.weights.array() * (1.0 - sigma.points.array()) * values[s].array() * values[t].array()).sum();
}

OraclePolynomials oracle_from_measure(const DiscreteMeasure& sigma_in, int t_max) {
  if (t_max < 0) throw DomainError("oracle: t_max must be nonnegative");
  const DiscreteMeasure merged = aggregate(sigma_in, 1e-9);
  std::vector<double> pts, wts;
  for (int i = 0; i < merged.size(); ++i) {
    if (merged.weights[i] > 0 && merged.points[i] < 1.0 - 1e-12) {
      pts.push_back(merged.points[i]);
      wts.push_back(merged.weights[i]);
    }
  }
  const int m = static_cast<int>(pts.size());
  if (m == 0) throw DomainError("oracle: measure has no mass away from lambda = 1, nothing to fit");

  OraclePolynomials out;
  out.sigma.points = Eigen::Map<Eigen::VectorXd>(pts.data(), m);
  out.sigma.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), m);
  const Eigen::ArrayXd tau = out.sigma.weights.array() * (1.0 - out.sigma.points.array());
  const Eigen::ArrayXd lam = out.sigma.points.array();

  auto inner = [&](const Eigen::VectorXd& p, const Eigen::VectorXd& q) { return (tau * p.array() * q.array()).sum(); };

  // values[t] holds pi_t on the support; one_value tracks pi_t(1) during construction.
  const int regular_top = std::min(t_max, m - 1);
  out.values.push_back(Eigen::VectorXd::Ones(m));
  out.monomial.push_back(Eigen::VectorXd::Ones(1));
  std::vector<double> norms{inner(out.values[0], out.values[0])};

  for (int t = 0; t < regular_top; ++t) {
    Eigen::VectorXd v = (lam * out.values[t].array()).matrix();
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(t + 2);
    coef.tail(t + 1) = out.monomial[t];
    double at_one = 1.0;  // lambda * pi_t evaluated at 1
    for (int pass = 0; pass < 2; ++pass) {
      for (int s = 0; s <= t; ++s) {
        const double h = inner(v, out.values[s]) / norms[s];
        v -= h * out.values[s];
        coef.head(s + 1) -= h * out.monomial[s];
        at_one -= h;
      }
    }
    if (at_one == 0.0) throw EstimationError("oracle: polynomial vanishes at 1");
    v /= at_one;
    coef /= at_one;
    out.values.push_back(v);
    out.monomial.push_back(coef);
    norms.push_back(inner(v, v));
  }

  if (t_max >= m) {
    // Polynomial vanishing on the whole support, normalized at 1.
    Eigen::VectorXd coef = Eigen::VectorXd::Ones(1);
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd next = Eigen::VectorXd::Zero(coef.size() + 1);
      next.tail(coef.size()) += coef;
      next.head(coef.size()) -= pts[j] * coef;
      coef = next / (1.0 - pts[j]);
    }
    out.values.push_back(Eigen::VectorXd::Zero(m));
    out.monomial.push_back(coef);
    norms.push_back(0.0);
    out.perfect_degree = m;
  }

  const int top = static_cast<int>(out.values.size()) - 1;
  for (int t = 0; t < top; ++t) {
    const Eigen::VectorXd lp = (lam * out.values[t].array()).matrix();
    Coeffs<double> k;
    const double ratio_b = inner(lp, out.values[t]) / norms[t];
    const double ratio_c = t > 0 ? inner(lp, out.values[t - 1]) / norms[t - 1] : 0.0;
    if (t + 1 == out.perfect_degree) {
      // Zero-norm terminal polynomial: a from the normalization a + b - c = 1.
      k.a = 1.0 / (1.0 - ratio_b - ratio_c);
    } else {
      k.a = norms[t + 1] / inner(lp, out.values[t + 1]);
    }
    k.b = -k.a * ratio_b;
    k.c = k.a * ratio_c;
    out.coeffs.push_back(k);
  }
  return out;
}

DiscreteMeasure jacobi_weight_measure(double alpha, double beta, int nodes) {
  if (!(alpha > -1) || !(beta > -1)) throw DomainError("jacobi weight: need alpha, beta > -1");
  const QuadratureRule q = gauss_legendre(nodes);
  DiscreteMeasure m;
  m.points.resize(nodes);
  m.weights.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double l = q.nodes[i];
    m.points[i] = l;
    m.weights[i] = q.weights[i] * std::pow(1.0 - l, alpha - 1.0) * std::pow(1.0 + l, beta);
  }
  return m;
}

DiscreteMeasure kesten_mckay_measure(int d, int nodes) {
  const double edge = kesten_mckay_edge(d);
  const QuadratureRule q = gauss_legendre(nodes, -edge, edge);
  DiscreteMeasure m;
  m.points.resize(nodes);
  m.weights.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    m.points[i] = q.nodes[i];
    m.weights[i] = q.weights[i] * kesten_mckay_density(d, q.nodes[i]);
  }
  return m;
}

}  // namespace polygossip
