#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polygossip {

struct ExperimentRecord {
  std::string method;
  int rep = 0;
  int t = 0;
  double consensus_error = 0;  // |x^t - mean(xi) 1| / sqrt(n)
  std::optional<double> mse;   // mean over vertices of (x^t_v - mu)^2

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Orders by (method, rep, t).
void sort_records(std::vector<ExperimentRecord>& records);

/// Header "method,rep,t,consensus_error" plus ",mse" when any record carries
/// one (then all must). Reals printed with 17 significant digits.
void write_csv(std::ostream& out, std::vector<ExperimentRecord> records);
void export_csv(const std::vector<ExperimentRecord>& records, const std::string& path);

std::vector<ExperimentRecord> parse_csv(std::istream& in);
std::vector<ExperimentRecord> read_csv(const std::string& path);

enum class RecordField { consensus_error, mse };

/// Mean over repetitions of a field, per t, for one method.
std::map<int, double> mean_curve(const std::vector<ExperimentRecord>& records, const std::string& method,
                                 RecordField field = RecordField::consensus_error);

/// Method labels in first-seen order.
std::vector<std::string> method_labels(const std::vector<ExperimentRecord>& records);

}  // namespace polygossip
