#include "fdaclust/simulate.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>

#include "fdaclust/errors.hpp"

namespace fdaclust {

namespace {

// Stream tags keep X draws, U draws and downstream consumers decorrelated.
constexpr std::uint64_t kStreamX = 0x58u;
constexpr std::uint64_t kStreamU = 0x55u;

Eigen::MatrixXd cholesky_factor_with_jitter(const Eigen::MatrixXd& cov) {
  const int T = static_cast<int>(cov.rows());
  const double scale = cov.diagonal().mean();
  if (scale == 0.0 && cov.isZero(0.0))
    return Eigen::MatrixXd::Zero(T, T);
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  for (double jitter = 1e-10 * scale; jitter <= 1e-6 * scale; jitter *= 10.0) {
    llt.compute(cov + jitter * Eigen::MatrixXd::Identity(T, T));
    if (llt.info() == Eigen::Success) return llt.matrixL();
  }
  throw NumericError("sample_gp: Cholesky failed after jitter escalation");
}

}  // namespace

CovStructure parse_structure(std::string_view name) {
  if (name == "sqexp" || name == "ar1") return CovStructure::SquaredExponential;
  if (name == "independent") return CovStructure::Independent;
  if (name == "compound" || name == "cs") return CovStructure::CompoundSymmetry;
  throw DataError("unknown covariance structure '" + std::string(name) +
                  "' (expected sqexp|ar1|independent|compound)");
}

std::string structure_name(CovStructure s) {
  switch (s) {
    case CovStructure::SquaredExponential: return "sqexp";
    case CovStructure::Independent: return "independent";
    case CovStructure::CompoundSymmetry: return "compound";
  }
  return "?";
}

void CovarianceSpec::validate() const {
  if (!(sigma > 0.0)) throw DataError("CovarianceSpec: sigma must be > 0");
  if (structure == CovStructure::SquaredExponential && !(rho > 0.0))
    throw DataError("CovarianceSpec: sqexp needs rho > 0");
  if (structure == CovStructure::CompoundSymmetry &&
      !(rho >= 0.0 && rho < 1.0))
    throw DataError("CovarianceSpec: compound symmetry needs rho in [0,1)");
}

void ScenarioConfig::validate() const {
  if (n < 3 || n % 3 != 0)
    throw DataError("ScenarioConfig: n must be >= 3 and divisible by 3");
  if (J < 1) throw DataError("ScenarioConfig: J must be >= 1");
  if (T < 2) throw DataError("ScenarioConfig: T must be >= 2");
  x_cov.validate();
  u_cov.validate();
}

double mean_function(int group, double t) {
  switch (group) {
    case 1:
      return std::sin(2.0 * std::numbers::pi * t);
    case 2: {
      const double z = 16.0 * (t - 0.5);
      const double num = std::sin(std::numbers::pi * z / 2.0);
      const double den = 1.0 + 2.0 * z * z * (std::sin(8.0 * (t - 0.5)) + 1.0);
      return num / den;
    }
    case 3:
      return 1.0 - 2.0 * std::exp(-6.0 * t);
    default:
      throw DataError("mean_function: group must be 1, 2 or 3");
  }
}

Eigen::MatrixXd build_covariance(const CovarianceSpec& spec,
                                 const TimeGrid& grid) {
  spec.validate();
  const int T = grid.size();
  const double s2 = spec.sigma * spec.sigma;
  Eigen::MatrixXd cov(T, T);
  switch (spec.structure) {
    case CovStructure::SquaredExponential:
      for (int a = 0; a < T; ++a)
        for (int b = 0; b <= a; ++b) {
          const double d = grid[a] - grid[b];
          const double v = s2 * std::exp(-d * d / (2.0 * spec.rho * spec.rho));
          cov(a, b) = v;
          cov(b, a) = v;
        }
      break;
    case CovStructure::Independent:
      cov = s2 * Eigen::MatrixXd::Identity(T, T);
      break;
    case CovStructure::CompoundSymmetry:
      cov.setConstant(s2 * spec.rho);
      cov.diagonal().setConstant(s2);
      break;
  }
  return cov;
}

Eigen::VectorXd sample_gp(const Eigen::VectorXd& mean,
                          const Eigen::MatrixXd& cov, Rng& rng) {
  if (mean.size() != cov.rows() || cov.rows() != cov.cols())
    throw DataError("sample_gp: dimension mismatch");
  const Eigen::MatrixXd L = cholesky_factor_with_jitter(cov);
  Eigen::VectorXd z(mean.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = rng.normal();
  return mean + L * z;
}

FunctionalDataset generate_dataset(const ScenarioConfig& cfg) {
  cfg.validate();
  FunctionalDataset data;
  data.grid = TimeGrid::uniform(cfg.T);
  data.n = cfg.n;
  data.J = cfg.J;
  data.subject_ids.resize(cfg.n);
  data.w.resize(static_cast<std::size_t>(cfg.n) * cfg.J * cfg.T);

  const Eigen::MatrixXd x_cov = build_covariance(cfg.x_cov, data.grid);
  const Eigen::MatrixXd u_cov = build_covariance(cfg.u_cov, data.grid);

  Eigen::MatrixXd true_x(cfg.n, cfg.T);
  std::vector<int> labels(cfg.n);
  const int per_group = cfg.n / 3;

  for (int i = 0; i < cfg.n; ++i) {
    data.subject_ids[i] = std::to_string(i + 1);
    const int group = i / per_group + 1;
    labels[i] = group;

    Eigen::VectorXd mu(cfg.T);
    for (int t = 0; t < cfg.T; ++t) mu[t] = mean_function(group, data.grid[t]);

    Rng x_rng(Rng::derive_key(cfg.seed, kStreamX, static_cast<std::uint64_t>(i)));
    const Eigen::VectorXd xi = sample_gp(mu, x_cov, x_rng);
    true_x.row(i) = xi.transpose();

    for (int j = 0; j < cfg.J; ++j) {
      Rng u_rng(Rng::derive_key(cfg.seed, kStreamU,
                                static_cast<std::uint64_t>(i),
                                static_cast<std::uint64_t>(j)));
      const Eigen::VectorXd wij =
          sample_gp(xi, u_cov, u_rng);
      for (int t = 0; t < cfg.T; ++t) data.at(i, j, t) = wij[t];
    }
  }

  data.true_x = std::move(true_x);
  data.true_labels = Memberships(std::move(labels), 3);
  data.validate();
  return data;
}

}  // namespace fdaclust
