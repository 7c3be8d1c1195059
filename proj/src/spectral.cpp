#include "polygossip/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "polygossip/errors.hpp"

namespace polygossip {

SpectralSummary eigendecompose(const GossipMatrix& w, bool with_vectors, int dense_limit) {
  const int n = w.size();
  if (n > dense_limit)
    throw CapabilityError("dense eigendecomposition limited to n <= " + std::to_string(dense_limit) + " (got " +
                          std::to_string(n) + "); run iteration-only methods instead");
  SpectralSummary s;
  if (n == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      w.dense(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EstimationError("eigensolver did not converge");

  // Eigen returns ascending order; flip to descending.
  s.eigenvalues = solver.eigenvalues().reverse().cwiseMax(-1.0).cwiseMin(1.0);
  if (with_vectors) s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  if (n == 1) {
    s.gap = 1.0;
    s.absolute_gap = 1.0;
  } else {
    s.gap = 1.0 - s.eigenvalues[1];
    s.absolute_gap = std::min(s.gap, 1.0 + s.eigenvalues[n - 1]);
  }
  return s;
}

DiscreteMeasure spectral_measure_at_vertex(const SpectralSummary& s, Vertex v) {
  if (!s.has_vectors()) throw PreconditionError("vertex measure needs eigenvectors");
  if (v < 0 || v >= s.size()) throw PreconditionError("vertex out of range");
  DiscreteMeasure m;
  m.points = s.eigenvalues;
  m.weights = s.eigenvectors.row(v).transpose().array().square();
  return m;
}

DiscreteMeasure spectral_measure_of_signal(const SpectralSummary& s, const Eigen::VectorXd& xi) {
  if (!s.has_vectors()) throw PreconditionError("signal measure needs eigenvectors");
  if (xi.size() != s.size()) throw PreconditionError("signal length differs from matrix size");
  const int n = s.size();
  DiscreteMeasure m;
  m.points = s.eigenvalues.tail(n - 1);
  m.weights = (s.eigenvectors.rightCols(n - 1).transpose() * xi).array().square();
  return m;
}

DiscreteMeasure aggregate(const DiscreteMeasure& m, double tol) {
  std::vector<int> order(m.size());
  for (int i = 0; i < m.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return m.points[a] > m.points[b]; });
  std::vector<double> pts, wts;
  for (int i : order) {
    if (!pts.empty() && pts.back() - m.points[i] <= tol) {
      wts.back() += m.weights[i];
    } else {
      pts.push_back(m.points[i]);
      wts.push_back(m.weights[i]);
    }
  }
  DiscreteMeasure out;
  out.points = Eigen::Map<Eigen::VectorXd>(pts.data(), static_cast<Eigen::Index>(pts.size()));
  out.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), static_cast<Eigen::Index>(wts.size()));
  return out;
}

int distinct_nonunit_eigenvalues(const SpectralSummary& s, double tol) {
  int count = 0;
  double last = 2.0;
  for (int i = 0; i < s.size(); ++i) {
    double l = s.eigenvalues[i];
    if (l >= 1.0 - tol) continue;
    if (last - l > tol) ++count;
    last = l;
  }
  return count;
}

double spectral_dimension_estimate(const DiscreteMeasure& m, double e_lo, double e_hi, int samples) {
  if (!(e_lo > 0) || !(e_hi > e_lo) || samples < 3)
    throw EstimationError("spectral_dimension_estimate: need 0 < e_lo < e_hi and samples >= 3");
  std::vector<double> xs, ys;
  const double step = std::log(e_hi / e_lo) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    const double e = e_lo * std::exp(step * k);
    double mass = 0;
    for (int i = 0; i < m.size(); ++i)
      if (m.points[i] >= 1.0 - e) mass += m.weights[i];
    if (mass <= 0) continue;
    xs.push_back(std::log(e));
    ys.push_back(std::log(mass));
  }
  if (xs.size() < 3) throw EstimationError("spectral_dimension_estimate: fewer than 3 usable E samples");
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return 2.0 * sxy / sxx;
}

double return_probability(const DiscreteMeasure& m, int t) {
  if (t < 0) throw PreconditionError("return_probability: t must be nonnegative");
  double p = 0;
  for (int i = 0; i < m.size(); ++i) p += m.weights[i] * std::pow(0.5 * (1.0 + m.points[i]), t);
  return p;
}

}  // namespace polygossip
