#include "fdaclust/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "fdaclust/errors.hpp"

namespace fdaclust {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, long line_no, const char* what) {
  if (s.empty() || s == "NA" || s == "NaN" || s == "nan") return kNaN;
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric " +
                    what + " '" + s + "'");
  }
  if (pos != s.size())
    throw DataError("line " + std::to_string(line_no) + ": non-numeric " +
                    what + " '" + s + "'");
  return v;
}

long parse_int(const std::string& s, long line_no, const char* what) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric " +
                    what + " '" + s + "'");
  }
  if (pos != s.size())
    throw DataError("line " + std::to_string(line_no) + ": non-numeric " +
                    what + " '" + s + "'");
  return v;
}

std::string fmt12(double v) {
  char buf[64];
  if (std::isnan(v)) return "NaN";
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Eigen::MatrixXd FunctionalDataset::replicate_mean() const {
  Eigen::MatrixXd out(n, T());
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < T(); ++t) {
      double sum = 0.0;
      int cnt = 0;
      for (int j = 0; j < J; ++j) {
        const double v = at(i, j, t);
        if (!std::isnan(v)) {
          sum += v;
          ++cnt;
        }
      }
      out(i, t) = cnt > 0 ? sum / cnt : kNaN;
    }
  }
  return out;
}

Eigen::MatrixXd FunctionalDataset::first_replicate() const {
  Eigen::MatrixXd out(n, T());
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < T(); ++t) {
      double v = at(i, 0, t);
      for (int j = 1; j < J && std::isnan(v); ++j) v = at(i, j, t);
      out(i, t) = v;
    }
  }
  return out;
}

Eigen::MatrixXd FunctionalDataset::slice_at(int t) const {
  Eigen::MatrixXd out(n, J);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < J; ++j) out(i, j) = at(i, j, t);
  return out;
}

void FunctionalDataset::validate() const {
  grid.validate();
  if (n < 1 || J < 1) throw DataError("FunctionalDataset: need n >= 1, J >= 1");
  if (w.size() != static_cast<std::size_t>(n) * J * T())
    throw DataError("FunctionalDataset: value array has wrong size");
  if (subject_ids.size() != static_cast<std::size_t>(n))
    throw DataError("FunctionalDataset: subject id list has wrong size");
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < T(); ++t) {
      bool observed = false;
      for (int j = 0; j < J; ++j)
        if (!std::isnan(at(i, j, t))) {
          observed = true;
          break;
        }
      if (!observed)
        throw DataError("FunctionalDataset: subject " + subject_ids[i] +
                        " has no observed replicate at grid index " +
                        std::to_string(t));
    }
  if (true_x && (true_x->rows() != n || true_x->cols() != T()))
    throw DataError("FunctionalDataset: true_x has wrong shape");
  if (true_labels && true_labels->n() != n)
    throw DataError("FunctionalDataset: true_labels has wrong length");
}

FunctionalDataset load_long_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty file");
  const auto header = split_csv_line(line);
  auto col = [&](const std::string& name) -> int {
    for (std::size_t k = 0; k < header.size(); ++k)
      if (header[k] == name) return static_cast<int>(k);
    return -1;
  };
  const int c_subj = col("subject"), c_rep = col("replicate"),
            c_time = col("time"), c_val = col("value");
  if (c_subj < 0 || c_rep < 0 || c_time < 0 || c_val < 0)
    throw DataError(path + ": header must contain subject,replicate,time,value");
  const int c_tval = col("true_value");
  const int c_tlab = col("true_label");

  struct Cell {
    double value;
    double true_value;
    long line_no;
  };
  // subject -> replicate -> time -> cell
  std::vector<std::string> order;
  std::map<std::string, std::map<long, std::map<double, Cell>>> table;
  std::map<std::string, long> label_of;

  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (static_cast<int>(f.size()) <= std::max({c_subj, c_rep, c_time, c_val}))
      throw DataError("line " + std::to_string(line_no) + ": too few fields");
    const std::string& subj = f[c_subj];
    if (subj.empty())
      throw DataError("line " + std::to_string(line_no) + ": empty subject id");
    const long rep = parse_int(f[c_rep], line_no, "replicate");
    if (rep < 1)
      throw DataError("line " + std::to_string(line_no) +
                      ": replicate must be >= 1");
    const double t = parse_double(f[c_time], line_no, "time");
    if (std::isnan(t) || t < 0.0 || t > 1.0)
      throw DataError("line " + std::to_string(line_no) + ": time " +
                      f[c_time] + " outside [0,1]");
    const double v = parse_double(f[c_val], line_no, "value");
    double tv = kNaN;
    if (c_tval >= 0 && c_tval < static_cast<int>(f.size()))
      tv = parse_double(f[c_tval], line_no, "true_value");
    if (c_tlab >= 0 && c_tlab < static_cast<int>(f.size()) &&
        !f[c_tlab].empty()) {
      const long lab = parse_int(f[c_tlab], line_no, "true_label");
      auto it = label_of.find(subj);
      if (it == label_of.end())
        label_of[subj] = lab;
      else if (it->second != lab)
        throw DataError("line " + std::to_string(line_no) + ": subject " +
                        subj + " has conflicting true_label values");
    }

    if (table.find(subj) == table.end()) order.push_back(subj);
    auto& times = table[subj][rep];
    if (times.count(t))
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate (subject, replicate, time) row");
    times[t] = Cell{v, tv, line_no};
  }
  if (order.empty()) throw DataError(path + ": no data rows");

  // Grid = distinct sorted times; every (subject, replicate) must carry it
  // exactly, and every subject must carry the same replicate set 1..J.
  std::vector<double> grid_points;
  {
    const auto& first_subj = table[order.front()];
    for (const auto& [t, cell] : first_subj.begin()->second)
      grid_points.push_back(t);
  }
  long J_long = 0;
  for (const auto& subj : order) {
    const auto& reps = table[subj];
    if (J_long == 0) J_long = static_cast<long>(reps.size());
    if (static_cast<long>(reps.size()) != J_long ||
        reps.begin()->first != 1 || reps.rbegin()->first != J_long)
      throw DataError("subject " + subj +
                      ": replicate ids do not form the common set 1.." +
                      std::to_string(J_long));
    for (const auto& [rep, times] : reps) {
      if (times.size() != grid_points.size())
        throw DataError("subject " + subj + " replicate " +
                        std::to_string(rep) +
                        ": time grid differs from the rest of the file");
      std::size_t k = 0;
      for (const auto& [t, cell] : times) {
        if (t != grid_points[k])
          throw DataError("subject " + subj + " replicate " +
                          std::to_string(rep) +
                          ": time grid differs from the rest of the file");
        ++k;
      }
    }
  }

  FunctionalDataset data;
  data.grid = TimeGrid(grid_points);
  data.n = static_cast<int>(order.size());
  data.J = static_cast<int>(J_long);
  data.subject_ids = order;
  data.w.assign(static_cast<std::size_t>(data.n) * data.J * data.T(), kNaN);

  bool any_true_value = false;
  Eigen::MatrixXd tx = Eigen::MatrixXd::Constant(data.n, data.T(), kNaN);
  for (int i = 0; i < data.n; ++i) {
    const auto& reps = table[order[i]];
    for (const auto& [rep, times] : reps) {
      int t_idx = 0;
      for (const auto& [t, cell] : times) {
        data.at(i, static_cast<int>(rep) - 1, t_idx) = cell.value;
        if (!std::isnan(cell.true_value)) {
          tx(i, t_idx) = cell.true_value;
          any_true_value = true;
        }
        ++t_idx;
      }
    }
  }
  if (any_true_value) data.true_x = tx;

  if (!label_of.empty()) {
    if (label_of.size() != order.size())
      throw DataError("true_label present for some subjects but not all");
    std::vector<int> labs;
    labs.reserve(order.size());
    for (const auto& subj : order)
      labs.push_back(static_cast<int>(label_of[subj]));
    data.true_labels = Memberships(std::move(labs));
  }

  data.validate();
  return data;
}

void write_long_csv(const FunctionalDataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  const bool has_tx = data.true_x.has_value();
  const bool has_lab = data.true_labels.has_value();
  out << "subject,replicate,time,value";
  if (has_tx) out << ",true_value";
  if (has_lab) out << ",true_label";
  out << "\n";
  for (int i = 0; i < data.n; ++i) {
    for (int j = 0; j < data.J; ++j) {
      for (int t = 0; t < data.T(); ++t) {
        out << data.subject_ids[i] << ',' << (j + 1) << ','
            << fmt12(data.grid[t]) << ',' << fmt12(data.at(i, j, t));
        if (has_tx) out << ',' << fmt12((*data.true_x)(i, t));
        if (has_lab) out << ',' << data.true_labels->labels[i];
        out << "\n";
      }
    }
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

}  // namespace fdaclust
