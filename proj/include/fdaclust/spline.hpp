#pragma once

#include <Eigen/Core>
#include <vector>

#include "fdaclust/corrected_curves.hpp"
#include "fdaclust/time_grid.hpp"

namespace fdaclust {

// Clamped B-spline basis on [0,1] with equally spaced interior knots,
// evaluated on a fixed grid. Rows of B sum to 1 (partition of unity).
struct SplineBasis {
  int degree = 3;
  int K = 0;
  std::vector<double> knots;  // size K + degree + 1
  TimeGrid grid;
  Eigen::MatrixXd B;  // T x K
};

SplineBasis make_basis(const TimeGrid& grid, int K, int degree = 3);

// The K-2 x K second-order difference operator on coefficients.
Eigen::MatrixXd second_difference_matrix(int K);

// argmin_g ||y - B g||^2 + lambda ||D2 g||^2 via the normal equations.
Eigen::VectorXd penalized_fit(const Eigen::VectorXd& y,
                              const SplineBasis& basis, double lambda);

// GCV(lambda) = T ||y - yhat||^2 / (T - tr(H))^2 minimized over a 40-point
// log-spaced grid in [1e-6, 1e6].
double select_lambda(const Eigen::VectorXd& y, const SplineBasis& basis);

// K_n rule: clamp(ceil(1.5 n^{1/5}) + 4, 6, min(15, T-2)).
int default_basis_size(int n, int T);

struct CoefficientMatrix {
  Eigen::MatrixXd gamma;  // n x K
  SplineBasis basis;
};

// Per-subject penalized fits with one shared lambda (median of per-subject
// GCV picks), so coefficient rows stay comparable across subjects.
CoefficientMatrix coefficients(const CorrectedCurves& curves, int K);
CoefficientMatrix coefficients_of_matrix(const Eigen::MatrixXd& curves,
                                         const TimeGrid& grid, int K);

}  // namespace fdaclust
