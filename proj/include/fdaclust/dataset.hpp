#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "fdaclust/memberships.hpp"
#include "fdaclust/time_grid.hpp"

namespace fdaclust {

// Replicate-contaminated curves W on a common grid: n subjects x J replicates
// x T time points. NaN marks a missing replicate value; every (subject, t)
// must keep at least one observed replicate. Optionally carries the true
// curves and true cluster labels (simulated data has both).
struct FunctionalDataset {
  TimeGrid grid;
  int n = 0;
  int J = 0;
  std::vector<double> w;  // layout (i*J + j)*T + t
  std::vector<std::string> subject_ids;
  std::optional<Eigen::MatrixXd> true_x;  // n x T
  std::optional<Memberships> true_labels;

  int T() const { return grid.size(); }

  double at(int i, int j, int t) const {
    return w[(static_cast<std::size_t>(i) * J + j) * T() + t];
  }
  double& at(int i, int j, int t) {
    return w[(static_cast<std::size_t>(i) * J + j) * T() + t];
  }

  // Per-subject mean over observed replicates (the "Average" input).
  Eigen::MatrixXd replicate_mean() const;

  // Replicate 1 curves (the "Naive" input); a missing entry falls back to the
  // first observed replicate at that (subject, t).
  Eigen::MatrixXd first_replicate() const;

  // n x J values at grid index t, NaN where missing.
  Eigen::MatrixXd slice_at(int t) const;

  void validate() const;
};

FunctionalDataset load_long_csv(const std::string& path);
void write_long_csv(const FunctionalDataset& data, const std::string& path);

}  // namespace fdaclust
