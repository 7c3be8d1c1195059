#include "polygossip/records.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polygossip/errors.hpp"

namespace polygossip {

namespace {

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const std::string& s, int line) {
  size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw IoError("line " + std::to_string(line) + ": bad number '" + s + "'");
  return x;
}

int parse_int(const std::string& s, int line) {
  size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw IoError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  return x;
}

}  // namespace

void sort_records(std::vector<ExperimentRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.rep != b.rep) return a.rep < b.rep;
    return a.t < b.t;
  });
}

void write_csv(std::ostream& out, std::vector<ExperimentRecord> records) {
  sort_records(records);
  const bool with_mse = std::any_of(records.begin(), records.end(), [](const auto& r) { return r.mse.has_value(); });
  out << "method,rep,t,consensus_error" << (with_mse ? ",mse" : "") << '\n';
  for (const auto& r : records) {
    if (r.method.find_first_of(",\"\n\r") != std::string::npos)
      throw IoError("method label '" + r.method + "' cannot be written unquoted");
    if (with_mse && !r.mse) throw IoError("record without mse in a table that has an mse column");
    out << r.method << ',' << r.rep << ',' << r.t << ',' << real(r.consensus_error);
    if (with_mse) out << ',' << real(*r.mse);
    out << '\n';
  }
}

void export_csv(const std::vector<ExperimentRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(out, records);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<ExperimentRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV input");
  bool with_mse;
  if (line == "method,rep,t,consensus_error")
    with_mse = false;
  else if (line == "method,rep,t,consensus_error,mse")
    with_mse = true;
  else
    throw IoError("unexpected CSV header '" + line + "'");

  std::vector<ExperimentRecord> out;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != (with_mse ? 5u : 4u))
      throw IoError("line " + std::to_string(number) + ": expected " + (with_mse ? "5" : "4") + " columns");
    ExperimentRecord r;
    r.method = cells[0];
    r.rep = parse_int(cells[1], number);
    r.t = parse_int(cells[2], number);
    r.consensus_error = parse_real(cells[3], number);
    if (with_mse) r.mse = parse_real(cells[4], number);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExperimentRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_csv(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::map<int, double> mean_curve(const std::vector<ExperimentRecord>& records, const std::string& method,
                                 RecordField field) {
  std::map<int, std::pair<double, int>> acc;
  for (const auto& r : records) {
    if (r.method != method) continue;
    double v;
    if (field == RecordField::mse) {
      if (!r.mse) throw PreconditionError("record has no mse value");
      v = *r.mse;
    } else {
      v = r.consensus_error;
    }
    auto& a = acc[r.t];
    a.first += v;
    a.second += 1;
  }
  std::map<int, double> out;
  for (const auto& [t, a] : acc) out[t] = a.first / a.second;
  return out;
}

std::vector<std::string> method_labels(const std::vector<ExperimentRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records)
    if (std::find(out.begin(), out.end(), r.method) == out.end()) out.push_back(r.method);
  return out;
}

}  // namespace polygossip
