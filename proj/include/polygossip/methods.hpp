#pragma once

// Named method descriptors ("jacobi:d=2", "shift_register:omega=1.5", ...) and
// construction of the matching iterator.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polygossip/iterations.hpp"

namespace polygossip {

enum class MethodKind {
  simple,
  lazy_simple,
  shift_register,
  jacobi,
  jacobi_general,
  jacobi_gap,
  kesten_mckay,
  parameter_free,
  message_passing,
  message_passing_regular,
  local_average,
};

struct MethodSpec {
  MethodKind kind = MethodKind::simple;
  std::map<std::string, double> params;
  std::string label;  // canonical text form, also the CSV method column

  bool has(const std::string& key) const { return params.count(key) != 0; }
  double get(const std::string& key) const;

  /// True for methods of the form x^t = P_t(W) xi.
  bool is_polynomial() const;
};

/// Parses name[:key=value]... Keys: d (jacobi, jacobi_gap, kesten_mckay),
/// alpha and beta (jacobi_general), omega or gamma (shift_register), gamma
/// (jacobi_gap). Omitted gamma/omega are filled from the measured spectral gap.
MethodSpec parse_method(const std::string& text);

/// Comma-separated list of methods.
std::vector<MethodSpec> parse_method_list(const std::string& text);

/// Everything a method may need. `gap` is called only by methods that use the
/// spectral gap and no explicit parameter.
struct MethodContext {
  const Graph* graph = nullptr;
  const GossipMatrix* matrix = nullptr;
  std::function<double()> gap;
  int horizon = 0;  // rounds the caller intends to run (local_average tables)
};

std::unique_ptr<Iteration> make_iteration(const MethodSpec& spec, const MethodContext& ctx,
                                          const Eigen::VectorXd& xi);

}  // namespace polygossip
