#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace dfm::newton {

using FloatMat = Eigen::MatrixXd;

/// M(t) = sum_i coeffs[i] t^i with constant n x n coefficients.
struct PolyMatrixFamily {
  std::vector<FloatMat> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::size_t n() const { return coeffs.empty() ? 0 : static_cast<std::size_t>(coeffs.front().rows()); }
};

struct NewtonConfig {
  int max_iters = 100;
  double residual_tol = 1e-10;
  double step_damping = 1.0;  ///< in (0, 1]
  double commute_tol = 1e-6;
  std::uint64_t seed = 0;
};

struct TrialResult {
  bool converged = false;
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool approx_type1 = false;
  double max_pairwise_commutator_norm = 0.0;
};

/// Coefficients R_0 .. R_{2r-1} of t^k in M M' - M' M:
///   R_k = sum_{i+j=k+1} j (C_i C_j - C_j C_i).
std::vector<FloatMat> commutator_residual(const PolyMatrixFamily& fam);

/// Directional derivative of commutator_residual at fam along delta.
std::vector<FloatMat> jacobian_apply(const PolyMatrixFamily& fam, const PolyMatrixFamily& delta);

/// sqrt(sum_k ||R_k||_F^2)
double residual_norm(const std::vector<FloatMat>& residual);

/// Max Frobenius norm of [C_i, C_j] over pairs; type 1 (approximately) iff <= tol.
std::pair<bool, double> approx_type1_check(const PolyMatrixFamily& fam, double tol);

/// Damped Gauss-Newton with minimum-norm least-squares steps. Throws
/// NumericalBreakdown on non-finite iterates.
std::pair<PolyMatrixFamily, TrialResult> newton_solve(PolyMatrixFamily start, const NewtonConfig& config);

struct ExperimentOptions {
  bool near_type2 = false;
  double perturbation = 1e-2;  ///< noise scale for near-type-2 starts
  bool keep_trials = false;
};

struct TrialRecord {
  std::size_t index = 0;
  bool breakdown = false;
  TrialResult result;
};

struct ExperimentSummary {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t max_degree_used = 0;  ///< near-type-2 bases may exceed r
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool near_type2 = false;
  std::size_t converged_count = 0;
  std::size_t type1_among_converged = 0;
  std::size_t breakdown_count = 0;
  double convergence_rate = 0.0;
  double type1_fraction_among_converged = 0.0;
  double residual_max = 0.0;   ///< over converged trials
  double residual_mean = 0.0;
  double commutator_max = 0.0;  ///< over converged trials
  double commutator_mean = 0.0;
  double mean_iterations = 0.0;
  std::vector<TrialRecord> records;
};

/// Random standard-normal family for trial `index` of a seeded batch.
PolyMatrixFamily random_family(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t index);

/// Runs `trials` independent Newton solves. Per-trial random streams depend
/// only on (config.seed, trial index).
ExperimentSummary run_experiment(std::size_t n, std::size_t r, std::size_t trials,
                                 const NewtonConfig& config, const ExperimentOptions& options = {});

}  // namespace dfm::newton
