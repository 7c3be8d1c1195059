#include "polygossip/experiment.hpp"

#include <cmath>
#include <memory>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

#include "polygossip/errors.hpp"
#include "polygossip/spectral.hpp"

namespace polygossip {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CachedInstance {
  Instance inst;
  std::optional<double> gap;
};

std::vector<ExperimentRecord> run(const ExperimentConfig& cfg, bool with_mse) {
  cfg.validate();
  std::vector<ExperimentRecord> records;
  records.reserve(cfg.methods.size() * cfg.repetitions * (cfg.t_max + 1));
  std::unique_ptr<CachedInstance> cached;

  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    if (!cached || cfg.graph.is_random()) cached = std::make_unique<CachedInstance>(CachedInstance{make_instance(cfg, rep), {}});
    CachedInstance& ci = *cached;
    const int n = ci.inst.graph.vertex_count();
    const Eigen::VectorXd xi = make_signal(cfg, rep, n);
    const double mean = n > 0 ? xi.mean() : 0.0;
    const double scale = n > 0 ? 1.0 / std::sqrt(static_cast<double>(n)) : 0.0;

    MethodContext ctx;
    ctx.graph = &ci.inst.graph;
    ctx.matrix = &ci.inst.matrix;
    ctx.horizon = cfg.t_max;
    ctx.gap = [&ci]() {
      if (!ci.gap) ci.gap = eigendecompose(ci.inst.matrix, false).gap;
      return *ci.gap;
    };

    for (const MethodSpec& m : cfg.methods) {
      auto it = make_iteration(m, ctx, xi);
      for (int t = 0; t <= cfg.t_max; ++t) {
        if (t > 0) it->step();
        const Eigen::VectorXd& x = it->estimate();
        ExperimentRecord r;
        r.method = m.label;
        r.rep = rep;
        r.t = t;
        r.consensus_error = (x.array() - mean).matrix().norm() * scale;
        if (with_mse) r.mse = n > 0 ? (x.array() - cfg.signal.mean).square().mean() : 0.0;
        records.push_back(std::move(r));
      }
    }
  }
  sort_records(records);
  return records;
}

}  // namespace

void ExperimentConfig::validate() const {
  graph.validate();
  if (t_max < 1) throw SpecificationError("t_max must be at least 1");
  if (repetitions < 1) throw SpecificationError("repetitions must be at least 1");
  if (methods.empty()) throw SpecificationError("no methods configured");
  if (!(signal.stddev >= 0)) throw SpecificationError("signal standard deviation must be nonnegative");
  if (d_max < 0) throw SpecificationError("d_max override must be nonnegative");
  for (size_t i = 0; i < methods.size(); ++i)
    for (size_t j = i + 1; j < methods.size(); ++j)
      if (methods[i].label == methods[j].label) throw SpecificationError("method '" + methods[i].label + "' listed twice");
}

std::uint64_t repetition_seed(std::uint64_t seed, int rep) { return seed ^ splitmix64(static_cast<std::uint64_t>(rep)); }

Instance make_instance(const ExperimentConfig& cfg, int rep) {
  GraphSpec spec = cfg.graph;
  spec.seed = repetition_seed(cfg.seed, rep);
  Graph g = generate(spec);
  if (cfg.largest_component) g = largest_component(g).graph;
  Instance inst{std::move(g), {}};
  inst.matrix = build_gossip_matrix(inst.graph, cfg.matrix, cfg.d_max);
  return inst;
}

Eigen::VectorXd make_signal(const ExperimentConfig& cfg, int rep, int n) {
  if (cfg.signal.constant) return Eigen::VectorXd::Constant(n, *cfg.signal.constant);
  boost::random::mt19937_64 rng(splitmix64(repetition_seed(cfg.seed, rep) ^ 0x5349474e414cULL));
  boost::random::normal_distribution<double> normal(cfg.signal.mean, cfg.signal.stddev);
  Eigen::VectorXd xi(n);
  for (int i = 0; i < n; ++i) xi[i] = normal(rng);
  return xi;
}

std::vector<ExperimentRecord> run_consensus_experiment(const ExperimentConfig& cfg) { return run(cfg, false); }

std::vector<ExperimentRecord> run_mse_experiment(const ExperimentConfig& cfg) { return run(cfg, true); }

bool in_optimal_region(double alpha, double beta, double d_left, double d_right) {
  return alpha >= (d_right - 1.0) / 2.0 && beta <= alpha + (d_left - d_right) / 2.0;
}

SweepResult run_tuning_sweep(const ExperimentConfig& base, const std::vector<std::pair<double, double>>& grid,
                             double d_left, double d_right) {
  SweepResult out;
  ExperimentConfig cfg = base;
  for (auto [alpha, beta] : grid) {
    if (!(alpha > -1) || !(beta > -1)) throw DomainError("sweep: need alpha, beta > -1");
    char buf[96];
    std::snprintf(buf, sizeof buf, "jacobi_general:alpha=%.17g:beta=%.17g", alpha, beta);
    SweepPoint p{alpha, beta, buf, in_optimal_region(alpha, beta, d_left, d_right)};
    cfg.methods.push_back(parse_method(p.label));
    out.points.push_back(std::move(p));
  }
  out.records = run_consensus_experiment(cfg);
  return out;
}

RateFit fit_rate(const std::vector<ExperimentRecord>& records, const std::string& method, int t_lo, int t_hi,
                 FitKind kind, RecordField field) {
  if (t_hi < t_lo) throw EstimationError("fit_rate: empty window");
  const auto curve = mean_curve(records, method, field);
  std::vector<double> xs, ys;
  for (auto it = curve.lower_bound(t_lo); it != curve.end() && it->first <= t_hi; ++it) {
    if (!(it->second > 0))
      throw EstimationError("fit_rate: nonpositive value at t = " + std::to_string(it->first) +
                            " (consensus reached); shrink the window");
    if (kind == FitKind::loglog && it->first <= 0) throw EstimationError("fit_rate: log-log fit needs t > 0");
    xs.push_back(kind == FitKind::loglog ? std::log(static_cast<double>(it->first)) : it->first);
    ys.push_back(std::log(it->second));
  }
  if (xs.size() < 5) throw EstimationError("fit_rate: fewer than 5 points in window for '" + method + "'");
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
  const double slope = sxy / sxx;
  double ss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + slope * (xs[i] - mx));
    ss += e * e;
  }
  RateFit fit;
  fit.method = method;
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.kind = kind;
  fit.value = kind == FitKind::geometric ? std::exp(slope) : slope;
  fit.residual = std::sqrt(ss / xs.size());
  return fit;
}

std::vector<std::string> preset_names() {
  return {"grid2d", "grid3d", "perc2d", "perc3d", "rgg2d", "rgg3d", "grid2d-log", "regular3"};
}

ExperimentConfig preset(std::string_view name, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.repetitions = 10;
  cfg.t_max = 200;
  std::string jacobi = "jacobi:d=2";
  if (name == "grid2d" || name == "grid2d-log") {
    cfg.graph.family = GraphFamily::grid;
    cfg.graph.dims = {40, 40};
    cfg.matrix = MatrixKind::uniform_degree;
    cfg.d_max = 4;
  } else if (name == "grid3d") {
    cfg.graph.family = GraphFamily::grid;
    cfg.graph.dims = {12, 12, 12};
    cfg.d_max = 6;
    jacobi = "jacobi:d=3";
  } else if (name == "perc2d") {
    cfg.graph.family = GraphFamily::percolation_bond;
    cfg.graph.dims = {40, 40};
    cfg.graph.p = 0.6;
    cfg.largest_component = true;
    cfg.d_max = 4;
  } else if (name == "perc3d") {
    cfg.graph.family = GraphFamily::percolation_bond;
    cfg.graph.dims = {12, 12, 12};
    cfg.graph.p = 0.4;
    cfg.largest_component = true;
    cfg.d_max = 6;
    jacobi = "jacobi:d=3";
  } else if (name == "rgg2d") {
    cfg.graph.family = GraphFamily::random_geometric;
    cfg.graph.n = 1600;
    cfg.graph.d = 2;
    cfg.graph.radius = 1.5 / std::sqrt(1600.0);
    cfg.largest_component = true;
    cfg.matrix = MatrixKind::max_neighbor_degree;
  } else if (name == "rgg3d") {
    cfg.graph.family = GraphFamily::random_geometric;
    cfg.graph.n = 1728;
    cfg.graph.d = 3;
    cfg.graph.radius = 1.5 / std::cbrt(1728.0);
    cfg.largest_component = true;
    cfg.matrix = MatrixKind::max_neighbor_degree;
    jacobi = "jacobi:d=3";
  } else if (name == "regular3") {
    cfg.graph.family = GraphFamily::random_regular;
    cfg.graph.n = 2000;
    cfg.graph.d = 3;
    cfg.matrix = MatrixKind::adjacency_over_d;
    cfg.t_max = 50;
    cfg.methods = parse_method_list("simple,shift_register,jacobi:d=3,message_passing,local_average");
    return cfg;
  } else {
    throw SpecificationError("unknown figure preset '" + std::string(name) + "'");
  }
  std::string methods = "simple,shift_register," + jacobi + ",local_average";
  if (name == "grid2d-log") {
    cfg.t_max = 500;
    methods += ",jacobi_gap:d=2,parameter_free,message_passing";
  }
  cfg.methods = parse_method_list(methods);
  return cfg;
}

}  // namespace polygossip
