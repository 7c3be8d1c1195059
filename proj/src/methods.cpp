#include "polygossip/methods.hpp"

#include <set>
#include <sstream>

#include "polygossip/errors.hpp"

namespace polygossip {

namespace {

struct KindInfo {
  MethodKind kind;
  const char* name;
  std::set<std::string> keys;
  std::set<std::string> required;
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {MethodKind::simple, "simple", {}, {}},
      {MethodKind::lazy_simple, "lazy_simple", {}, {}},
      {MethodKind::shift_register, "shift_register", {"omega", "gamma"}, {}},
      {MethodKind::jacobi, "jacobi", {"d"}, {"d"}},
      {MethodKind::jacobi_general, "jacobi_general", {"alpha", "beta"}, {"alpha", "beta"}},
      {MethodKind::jacobi_gap, "jacobi_gap", {"d", "gamma"}, {"d"}},
      {MethodKind::kesten_mckay, "kesten_mckay", {"d"}, {"d"}},
      {MethodKind::parameter_free, "parameter_free", {}, {}},
      {MethodKind::message_passing, "message_passing", {}, {}},
      {MethodKind::message_passing_regular, "message_passing_regular", {}, {}},
      {MethodKind::local_average, "local_average", {}, {}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

double MethodSpec::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw SpecificationError(label + ": missing parameter '" + key + "'");
  return it->second;
}

bool MethodSpec::is_polynomial() const {
  switch (kind) {
    case MethodKind::message_passing:
    case MethodKind::local_average:
      return false;
    default:
      return true;
  }
}

MethodSpec parse_method(const std::string& text_in) {
  const std::string text = trim(text_in);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(trim(part));
  if (parts.empty() || parts[0].empty()) throw SpecificationError("empty method name");

  const KindInfo* info = nullptr;
  for (const auto& k : kinds())
    if (parts[0] == k.name) info = &k;
  if (!info) throw SpecificationError("unknown method '" + parts[0] + "'");

  MethodSpec spec;
  spec.kind = info->kind;
  spec.label = text;
  for (size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw SpecificationError("method parameter '" + parts[i] + "' is not key=value");
    const std::string key = trim(parts[i].substr(0, eq));
    const std::string value = trim(parts[i].substr(eq + 1));
    if (!info->keys.count(key)) throw SpecificationError(std::string(info->name) + ": unknown parameter '" + key + "'");
    size_t used = 0;
    double x = 0;
    try {
      x = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw SpecificationError("method parameter '" + parts[i] + "' is not numeric");
    spec.params[key] = x;
  }
  for (const auto& key : info->required)
    if (!spec.has(key)) throw SpecificationError(std::string(info->name) + ": parameter '" + key + "' is required");
  if (spec.has("omega") && spec.has("gamma")) throw SpecificationError("shift_register: give omega or gamma, not both");
  return spec;
}

std::vector<MethodSpec> parse_method_list(const std::string& text) {
  std::vector<MethodSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(parse_method(item));
  if (out.empty()) throw SpecificationError("no methods given");
  return out;
}

std::unique_ptr<Iteration> make_iteration(const MethodSpec& spec, const MethodContext& ctx,
                                          const Eigen::VectorXd& xi) {
  auto need_matrix = [&]() -> const GossipMatrix& {
    if (!ctx.matrix) throw PreconditionError(spec.label + ": needs a gossip matrix");
    return *ctx.matrix;
  };
  auto need_graph = [&]() -> const Graph& {
    if (!ctx.graph) throw PreconditionError(spec.label + ": needs the graph");
    return *ctx.graph;
  };
  auto gamma = [&]() {
    if (spec.has("gamma")) return spec.get("gamma");
    if (!ctx.gap) throw PreconditionError(spec.label + ": no spectral gap available");
    return ctx.gap();
  };

  switch (spec.kind) {
    case MethodKind::simple:
      return std::make_unique<SimpleGossip>(need_matrix(), xi);
    case MethodKind::lazy_simple:
      return std::make_unique<SimpleGossip>(need_matrix(), xi, true);
    case MethodKind::shift_register: {
      const double omega = spec.has("omega") ? spec.get("omega") : shift_register_omega(gamma());
      return std::make_unique<ShiftRegister>(need_matrix(), xi, omega);
    }
    case MethodKind::jacobi:
      return std::make_unique<PolynomialIteration>(need_matrix(), xi, jacobi_recurrence(spec.get("d")));
    case MethodKind::jacobi_general:
      return std::make_unique<PolynomialIteration>(
          need_matrix(), xi, jacobi_general_recurrence(spec.get("alpha"), spec.get("beta")));
    case MethodKind::jacobi_gap:
      return std::make_unique<JacobiGap>(need_matrix(), xi, spec.get("d"), gamma());
    case MethodKind::kesten_mckay: {
      const double d = spec.get("d");
      if (d != static_cast<int>(d)) throw DomainError("kesten_mckay: d must be an integer");
      return std::make_unique<PolynomialIteration>(need_matrix(), xi, kesten_mckay_recurrence(static_cast<int>(d)));
    }
    case MethodKind::parameter_free:
      return std::make_unique<ParameterFree>(need_matrix(), xi);
    case MethodKind::message_passing:
      return std::make_unique<MessagePassing>(need_graph(), xi);
    case MethodKind::message_passing_regular:
      return std::make_unique<MessagePassingRegular>(need_graph(), xi);
    case MethodKind::local_average:
      return std::make_unique<LocalAverage>(need_graph(), xi, ctx.horizon);
  }
  throw SpecificationError("unhandled method kind");
}

}  // namespace polygossip
