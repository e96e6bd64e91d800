#pragma once

#include <Eigen/Core>

#include "fdaclust/time_grid.hpp"

namespace fdaclust {

// Stage-1 output: predicted true curves, one row per subject.
struct CorrectedCurves {
  TimeGrid grid;
  Eigen::MatrixXd x_hat;  // n x T
};

}  // namespace fdaclust
