#pragma once

// Dense spectral analysis used for verification and tuning.

#include <Eigen/Dense>

#include "polygossip/gossip_matrix.hpp"

namespace polygossip {

inline constexpr int kDefaultDenseLimit = 4096;

struct SpectralSummary {
  Eigen::VectorXd eigenvalues;   // descending, clamped to [-1, 1]
  Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalues[i]; empty when not requested
  double gap = 0;                // 1 - lambda_2
  double absolute_gap = 0;       // min(1 - lambda_2, 1 + lambda_n)

  int size() const { return static_cast<int>(eigenvalues.size()); }
  bool has_vectors() const { return eigenvectors.cols() == eigenvalues.size() && eigenvalues.size() > 0; }
};

/// Full symmetric eigendecomposition. For n = 1 both gaps are reported as 1.
/// Throws CapabilityError when n exceeds dense_limit.
SpectralSummary eigendecompose(const GossipMatrix& w, bool with_vectors = true,
                               int dense_limit = kDefaultDenseLimit);

struct DiscreteMeasure {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(points.size()); }
  double total_mass() const { return weights.sum(); }
};

/// sigma(G, W, v): weight (u^i_v)^2 at every eigenvalue, including lambda_1.
DiscreteMeasure spectral_measure_at_vertex(const SpectralSummary& s, Vertex v);

/// Weights <xi, u^i>^2 at eigenvalues i = 2..n; total mass |xi - mean(xi) 1|^2.
DiscreteMeasure spectral_measure_of_signal(const SpectralSummary& s, const Eigen::VectorXd& xi);

/// Merges points closer than tol (sorted descending) for reporting.
DiscreteMeasure aggregate(const DiscreteMeasure& m, double tol = 1e-9);

/// Number of distinct eigenvalues (tolerance tol) strictly below 1 - tol.
int distinct_nonunit_eigenvalues(const SpectralSummary& s, double tol = 1e-9);

/// Twice the least-squares slope of ln sigma([1-E, 1]) against ln E on a
/// geometric grid of `samples` points over [e_lo, e_hi]. Grid points with zero
/// mass are skipped; fewer than three usable points throws EstimationError.
double spectral_dimension_estimate(const DiscreteMeasure& m, double e_lo, double e_hi, int samples = 12);

/// sum_i w_i ((1 + lambda_i)/2)^t
double return_probability(const DiscreteMeasure& m, int t);

}  // namespace polygossip
