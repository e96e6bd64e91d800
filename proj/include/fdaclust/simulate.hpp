#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>

#include "fdaclust/dataset.hpp"
#include "fdaclust/rng.hpp"
#include "fdaclust/time_grid.hpp"

namespace fdaclust {

enum class CovStructure { SquaredExponential, Independent, CompoundSymmetry };

// Names: "sqexp" (alias "ar1", the paper's table vocabulary), "independent",
// "compound" (alias "cs").
CovStructure parse_structure(std::string_view name);
std::string structure_name(CovStructure s);

// Gaussian-process covariance on the grid: sigma is the marginal standard
// deviation, rho the correlation parameter (unused for Independent).
struct CovarianceSpec {
  CovStructure structure = CovStructure::SquaredExponential;
  double sigma = 1.0;
  double rho = 0.5;
  void validate() const;
};

struct ScenarioConfig {
  int n = 0;  // divisible by 3
  int J = 5;
  int T = 50;
  CovarianceSpec x_cov;
  CovarianceSpec u_cov;
  std::uint64_t seed = 0;
  void validate() const;
};

// The three group mean curves on [0,1].
double mean_function(int group, double t);

// sqexp:       Sigma(s,t) = sigma^2 exp(-(s-t)^2 / (2 rho^2))
// independent: sigma^2 I
// compound:    sigma^2 [(1-rho) I + rho 11^T]
Eigen::MatrixXd build_covariance(const CovarianceSpec& spec,
                                 const TimeGrid& grid);

// mean + L z with L from Cholesky of (cov + jitter I); jitter escalates from
// 1e-10*sigma^2 by factors of 10 up to 1e-6*sigma^2, then fails.
Eigen::VectorXd sample_gp(const Eigen::VectorXd& mean,
                          const Eigen::MatrixXd& cov, Rng& rng);

// Subjects 1..n/3 in group 1, then group 2, then group 3.
// X_i = mean_function(group, .) + GP(x_cov); W_ij = X_i + GP(u_cov).
FunctionalDataset generate_dataset(const ScenarioConfig& cfg);

}  // namespace fdaclust
