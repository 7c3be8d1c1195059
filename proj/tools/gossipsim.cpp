// gossipsim: command-line driver for graph generation, spectra, recurrence
// tables and gossip experiments. CSV goes to --out or stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polygossip/errors.hpp"
#include "polygossip/experiment.hpp"
#include "polygossip/orthopoly.hpp"
#include "polygossip/spectral.hpp"

using namespace polygossip;

namespace {

struct GraphOptions {
  std::string family = "grid";
  std::string dims;
  int n = 0;
  int d = 0;
  double p = 1.0;
  double radius = 0.0;
  bool largest = false;
  std::string matrix = "uniform_degree";
  int d_max = 0;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd, bool with_matrix) {
    cmd->add_option("--graph", family, "Graph family: grid, torus, percolation_bond, random_geometric, "
                                       "random_regular, random_tree, path, cycle, complete");
    cmd->add_option("--dims", dims, "Comma-separated side lengths (grid, torus, percolation_bond)");
    cmd->add_option("--n", n, "Vertex count");
    cmd->add_option("--d", d, "Degree (random_regular) or ambient dimension (random_geometric)");
    cmd->add_option("--p", p, "Edge-keep probability (percolation_bond)");
    cmd->add_option("--radius", radius, "Connection radius (random_geometric)");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_flag("--largest-component", largest, "Keep only the largest connected component");
    if (with_matrix) {
      cmd->add_option("--matrix", matrix, "uniform_degree, adjacency_over_d or max_neighbor_degree");
      cmd->add_option("--dmax", d_max, "d_max override for uniform_degree (0: maximum degree)");
    }
  }

  GraphSpec spec() const {
    GraphSpec s;
    s.family = parse_graph_family(family);
    s.dims.clear();
    std::stringstream ss(dims);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        s.dims.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw SpecificationError("bad --dims entry '" + item + "'");
      }
    }
    s.n = n;
    s.d = d;
    s.p = p;
    s.radius = radius;
    s.seed = seed;
    return s;
  }

  Graph graph() const {
    Graph g = generate(spec());
    return largest ? largest_component(g).graph : g;
  }
};

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecificationError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Recurrence recurrence_from(const std::string& text) {
  const MethodSpec m = parse_method(text);
  switch (m.kind) {
    case MethodKind::jacobi: return jacobi_recurrence(m.get("d"));
    case MethodKind::jacobi_general: return jacobi_general_recurrence(m.get("alpha"), m.get("beta"));
    case MethodKind::jacobi_gap: return jacobi_gap_recurrence(m.get("d"), m.get("gamma"));
    case MethodKind::kesten_mckay: {
      const double d = m.get("d");
      if (d != static_cast<int>(d)) throw DomainError("kesten_mckay: d must be an integer");
      return kesten_mckay_recurrence(static_cast<int>(d));
    }
    default:
      throw SpecificationError("'" + text + "' has no coefficient table; use jacobi, jacobi_general, jacobi_gap or kesten_mckay");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial gossip simulator"};
  app.require_subcommand(1);

  GraphOptions gopt;
  std::string out_path;
  std::string methods;
  int t_max = 200;
  int reps = 10;

  auto* generate_cmd = app.add_subcommand("generate", "Write a graph as 'n m' followed by edge lines");
  gopt.attach(generate_cmd, false);
  generate_cmd->add_option("--out", out_path, "Output path");

  int vertex = 0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue summary and the spectral measure at a vertex");
  gopt.attach(spectrum_cmd, true);
  spectrum_cmd->add_option("--vertex", vertex, "Vertex for the spectral measure");
  spectrum_cmd->add_option("--out", out_path, "Output path");

  std::string recurrence = "jacobi:d=2";
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Recurrence coefficient table t,a,b,c");
  coeffs_cmd->add_option("--recurrence", recurrence,
                         "jacobi:d=D, jacobi_general:alpha=A:beta=B, jacobi_gap:d=D:gamma=G or kesten_mckay:d=D");
  coeffs_cmd->add_option("--tmax", t_max, "Largest t");
  coeffs_cmd->add_option("--out", out_path, "Output path");

  auto add_run_options = [&](CLI::App* cmd) {
    gopt.attach(cmd, true);
    cmd->add_option("--methods", methods, "Comma-separated methods, e.g. simple,shift_register,jacobi:d=2");
    cmd->add_option("--tmax", t_max, "Rounds per run");
    cmd->add_option("--reps", reps, "Repetitions");
    cmd->add_option("--out", out_path, "Output path");
  };
  auto* run_cmd = app.add_subcommand("run", "Consensus experiment to CSV");
  add_run_options(run_cmd);

  double mu = 0.0, sigma = 1.0;
  auto* mse_cmd = app.add_subcommand("mse", "Statistical gossip experiment (MSE against the signal mean) to CSV");
  add_run_options(mse_cmd);
  mse_cmd->add_option("--mu", mu, "Signal mean");
  mse_cmd->add_option("--sigma", sigma, "Signal standard deviation");

  std::string alphas = "0,0.5,1,2", betas = "0,0.5,1";
  double d_left = 2, d_right = 2;
  std::string regions_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Jacobi (alpha, beta) grid to CSV");
  add_run_options(sweep_cmd);
  sweep_cmd->add_option("--alphas", alphas, "Comma-separated alpha values");
  sweep_cmd->add_option("--betas", betas, "Comma-separated beta values");
  sweep_cmd->add_option("--d-left", d_left, "Spectral dimension at -1 for the region test");
  sweep_cmd->add_option("--d-right", d_right, "Spectral dimension at 1 for the region test");
  sweep_cmd->add_option("--regions", regions_path, "Write alpha,beta,label,in_region to this path");

  std::string figure;
  int preset_reps = 0, preset_tmax = 0;
  std::uint64_t preset_seed = 0;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a figure preset");
  reproduce_cmd->add_option("--figure", figure, "Preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  reproduce_cmd->add_option("--seed", preset_seed, "RNG seed");
  reproduce_cmd->add_option("--reps", preset_reps, "Override repetitions");
  reproduce_cmd->add_option("--tmax", preset_tmax, "Override rounds");
  reproduce_cmd->add_option("--out", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate_cmd->parsed()) {
      Output out(out_path);
      write_graph(out.stream(), gopt.graph());
      out.finish();
    } else if (spectrum_cmd->parsed()) {
      const Graph g = gopt.graph();
      const GossipMatrix w = build_gossip_matrix(g, parse_matrix_kind(gopt.matrix), gopt.d_max);
      const SpectralSummary s = eigendecompose(w);
      Output out(out_path);
      auto& os = out.stream();
      const int n = s.size();
      os << "# n=" << n << '\n';
      if (n > 0) {
        os << "# lambda_1=" << real(s.eigenvalues[0]) << '\n';
        if (n > 1) os << "# lambda_2=" << real(s.eigenvalues[1]) << '\n';
        os << "# lambda_n=" << real(s.eigenvalues[n - 1]) << '\n';
      }
      os << "# gap=" << real(s.gap) << '\n';
      os << "# absolute_gap=" << real(s.absolute_gap) << '\n';
      os << "# measure at vertex " << vertex << '\n';
      const DiscreteMeasure m = aggregate(spectral_measure_at_vertex(s, vertex));
      os << "lambda,weight\n";
      for (int i = 0; i < m.size(); ++i) os << real(m.points[i]) << ',' << real(m.weights[i]) << '\n';
      out.finish();
    } else if (coeffs_cmd->parsed()) {
      if (t_max < 0) throw SpecificationError("--tmax must be nonnegative");
      const Recurrence rec = recurrence_from(recurrence);
      Output out(out_path);
      out.stream() << "t,a,b,c\n";
      for (int t = 0; t <= t_max; ++t) {
        const auto k = rec(t);
        out.stream() << t << ',' << real(k.a) << ',' << real(k.b) << ',' << real(k.c) << '\n';
      }
      out.finish();
    } else if (run_cmd->parsed() || mse_cmd->parsed() || sweep_cmd->parsed()) {
      ExperimentConfig cfg;
      cfg.graph = gopt.spec();
      cfg.largest_component = gopt.largest;
      cfg.matrix = parse_matrix_kind(gopt.matrix);
      cfg.d_max = gopt.d_max;
      cfg.t_max = t_max;
      cfg.repetitions = reps;
      cfg.seed = gopt.seed;
      cfg.signal.mean = mu;
      cfg.signal.stddev = sigma;
      std::vector<ExperimentRecord> records;
      if (sweep_cmd->parsed()) {
        if (!methods.empty()) cfg.methods = parse_method_list(methods);
        std::vector<std::pair<double, double>> grid;
        for (double a : parse_reals(alphas, "--alphas"))
          for (double b : parse_reals(betas, "--betas")) grid.emplace_back(a, b);
        const SweepResult res = run_tuning_sweep(cfg, grid, d_left, d_right);
        records = res.records;
        if (!regions_path.empty()) {
          Output reg(regions_path);
          reg.stream() << "alpha,beta,label,in_region\n";
          for (const auto& p : res.points)
            reg.stream() << real(p.alpha) << ',' << real(p.beta) << ',' << p.label << ',' << (p.in_region ? 1 : 0) << '\n';
          reg.finish();
        }
      } else {
        cfg.methods = parse_method_list(methods.empty() ? "simple,jacobi:d=2" : methods);
        records = mse_cmd->parsed() ? run_mse_experiment(cfg) : run_consensus_experiment(cfg);
      }
      Output out(out_path);
      write_csv(out.stream(), std::move(records));
      out.finish();
    } else if (reproduce_cmd->parsed()) {
      ExperimentConfig cfg = preset(figure, preset_seed);
      if (preset_reps > 0) cfg.repetitions = preset_reps;
      if (preset_tmax > 0) cfg.t_max = preset_tmax;
      Output out(out_path);
      write_csv(out.stream(), run_consensus_experiment(cfg));
      out.finish();
    }
  } catch (const SpecificationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
