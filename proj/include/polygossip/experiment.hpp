#pragma once

// Experiment harness: consensus and MSE runs, (alpha, beta) sweeps, rate fits
// and the figure presets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polygossip/gossip_matrix.hpp"
#include "polygossip/graph.hpp"
#include "polygossip/methods.hpp"
#include "polygossip/records.hpp"

namespace polygossip {

struct SignalSpec {
  double mean = 0.0;
  double stddev = 1.0;
  std::optional<double> constant;  // replaces the Gaussian draw when set
};

struct ExperimentConfig {
  GraphSpec graph;
  bool largest_component = false;
  MatrixKind matrix = MatrixKind::uniform_degree;
  int d_max = 0;  // uniform_degree override; 0 uses the maximum degree
  std::vector<MethodSpec> methods;
  int t_max = 200;
  int repetitions = 10;
  std::uint64_t seed = 0;
  SignalSpec signal;

  void validate() const;
};

/// seed XOR splitmix64(rep): adding repetitions never changes earlier ones.
std::uint64_t repetition_seed(std::uint64_t seed, int rep);

/// Graph and matrix for one repetition.
struct Instance {
  Graph graph;
  GossipMatrix matrix;
};
Instance make_instance(const ExperimentConfig& cfg, int rep);

/// Gaussian (or constant) signal for one repetition.
Eigen::VectorXd make_signal(const ExperimentConfig& cfg, int rep, int n);

/// One record per (method, rep, t) for t = 0..t_max. All methods of a
/// repetition share the graph and the signal. Sorted by (method, rep, t).
std::vector<ExperimentRecord> run_consensus_experiment(const ExperimentConfig& cfg);

/// Same protocol, also recording the MSE against the signal mean mu.
std::vector<ExperimentRecord> run_mse_experiment(const ExperimentConfig& cfg);

/// Sufficient optimality region for Jacobi parameters: alpha >= (d_right - 1)/2
/// and beta <= alpha + (d_left - d_right)/2.
bool in_optimal_region(double alpha, double beta, double d_left, double d_right);

struct SweepPoint {
  double alpha = 0, beta = 0;
  std::string label;
  bool in_region = false;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<ExperimentRecord> records;
};

/// Runs jacobi_general for each (alpha, beta) pair on top of the base
/// configuration's methods.
SweepResult run_tuning_sweep(const ExperimentConfig& base, const std::vector<std::pair<double, double>>& grid,
                             double d_left, double d_right);

enum class FitKind { geometric, loglog };

struct RateFit {
  std::string method;
  int t_lo = 0, t_hi = 0;
  FitKind kind = FitKind::geometric;
  double value = 0;     // per-step ratio e^slope (geometric) or log-log slope
  double residual = 0;  // RMS of the least-squares residuals
};

/// Fits the repetition-mean curve of `field` over t in [t_lo, t_hi]. Needs at
/// least five points, all positive; otherwise throws EstimationError so the
/// caller can shrink the window.
RateFit fit_rate(const std::vector<ExperimentRecord>& records, const std::string& method, int t_lo, int t_hi,
                 FitKind kind, RecordField field = RecordField::consensus_error);

/// Names accepted by preset().
std::vector<std::string> preset_names();

/// Figure presets: grid2d, grid3d, perc2d, perc3d, rgg2d, rgg3d, grid2d-log, regular3.
ExperimentConfig preset(std::string_view name, std::uint64_t seed);

}  // namespace polygossip
