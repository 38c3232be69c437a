#include "dfm/newton.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dfm/classify.hpp"
#include "dfm/errors.hpp"

namespace dfm::newton {

namespace {

FloatMat bracket(const FloatMat& a, const FloatMat& b) { return a * b - b * a; }

Eigen::VectorXd flatten(const std::vector<FloatMat>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.size();
  Eigen::VectorXd v(total);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    v.segment(at, b.size()) = Eigen::Map<const Eigen::VectorXd>(b.data(), b.size());
    at += b.size();
  }
  return v;
}

void unflatten_subtract(PolyMatrixFamily& fam, const Eigen::VectorXd& step, double scale) {
  Eigen::Index at = 0;
  for (auto& c : fam.coeffs) {
    Eigen::Map<Eigen::VectorXd>(c.data(), c.size()) -= scale * step.segment(at, c.size());
    at += c.size();
  }
}

Eigen::MatrixXd jacobian_matrix(const PolyMatrixFamily& fam) {
  const std::size_t n = fam.n();
  const std::size_t r = fam.degree();
  const Eigen::Index vars = static_cast<Eigen::Index>((r + 1) * n * n);
  const Eigen::Index eqs = static_cast<Eigen::Index>(2 * r * n * n);
  Eigen::MatrixXd jac(eqs, vars);
  PolyMatrixFamily delta;
  delta.coeffs.assign(r + 1, FloatMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  Eigen::Index col = 0;
  for (auto& c : delta.coeffs) {
    for (Eigen::Index e = 0; e < c.size(); ++e) {
      c.data()[e] = 1.0;
      jac.col(col++) = flatten(jacobian_apply(fam, delta));
      c.data()[e] = 0.0;
    }
  }
  return jac;
}

bool all_finite(const PolyMatrixFamily& fam) {
  return std::all_of(fam.coeffs.begin(), fam.coeffs.end(),
                     [](const FloatMat& c) { return c.allFinite(); });
}

}  // namespace

std::vector<FloatMat> commutator_residual(const PolyMatrixFamily& fam) {
  const std::size_t r = fam.degree();
  const auto n = static_cast<Eigen::Index>(fam.n());
  std::vector<FloatMat> res(2 * r, FloatMat::Zero(n, n));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      res[i + j - 1] += static_cast<double>(j) * bracket(fam.coeffs[i], fam.coeffs[j]);
    }
  }
  return res;
}

std::vector<FloatMat> jacobian_apply(const PolyMatrixFamily& fam, const PolyMatrixFamily& delta) {
  const std::size_t r = fam.degree();
  const auto n = static_cast<Eigen::Index>(fam.n());
  std::vector<FloatMat> res(2 * r, FloatMat::Zero(n, n));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      res[i + j - 1] += static_cast<double>(j) * (bracket(delta.coeffs[i], fam.coeffs[j]) +
                                                  bracket(fam.coeffs[i], delta.coeffs[j]));
    }
  }
  return res;
}

double residual_norm(const std::vector<FloatMat>& residual) {
  double s = 0.0;
  for (const auto& b : residual) s += b.squaredNorm();
  return std::sqrt(s);
}

std::pair<bool, double> approx_type1_check(const PolyMatrixFamily& fam, double tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < fam.coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < fam.coeffs.size(); ++j)
      worst = std::max(worst, bracket(fam.coeffs[i], fam.coeffs[j]).norm());
  return {worst <= tol, worst};
}

std::pair<PolyMatrixFamily, TrialResult> newton_solve(PolyMatrixFamily fam, const NewtonConfig& config) {
  if (!all_finite(fam)) throw NumericalBreakdown("non-finite starting family");
  TrialResult result;
  for (int it = 0;; ++it) {
    auto res = commutator_residual(fam);
    result.final_residual_norm = residual_norm(res);
    result.iterations = it;
    if (result.final_residual_norm <= config.residual_tol) {
      result.converged = true;
      break;
    }
    if (it >= config.max_iters) break;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jacobian_matrix(fam));
    Eigen::VectorXd step = cod.solve(flatten(res));
    if (!step.allFinite()) throw NumericalBreakdown("least-squares step is not finite");
    unflatten_subtract(fam, step, config.step_damping);
    if (!all_finite(fam)) throw NumericalBreakdown("iterate is not finite");
  }
  auto [type1, worst] = approx_type1_check(fam, config.commute_tol);
  result.approx_type1 = result.converged && type1;
  result.max_pairwise_commutator_norm = worst;
  return {std::move(fam), result};
}

namespace {

std::mt19937_64 trial_stream(std::uint64_t seed, std::size_t index, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), salt};
  return std::mt19937_64(seq);
}

// f g^T from make_type2 with a random quadratic f, scaled to a polynomial
// matrix and normalized to unit max-abs coefficient.
PolyMatrixFamily near_type2_family(std::size_t n, std::size_t r, std::uint64_t seed,
                                   std::size_t index, double perturbation) {
  auto rng = trial_stream(seed, index, 2);
  VecF f(n);
  MatF m;
  for (;;) {
    for (auto& x : f) {
      Poly p(std::vector<Rational>{Rational(static_cast<long>(rng() % 5) - 2),
                                   Rational(static_cast<long>(rng() % 5) - 2),
                                   Rational(static_cast<long>(rng() % 5) - 2)});
      x = RatFunc(p);
    }
    try {
      m = make_type2(f, rng());
      if (!m.is_zero()) break;
    } catch (const NoWitness&) {
    }
  }
  Poly d(Rational(1));
  for (const auto& x : m.data()) d = exact_div(d * x.den(), gcd(d, x.den()));
  m = RatFunc(d) * m;

  int deg = 0;
  for (const auto& x : m.data()) deg = std::max(deg, x.num().degree());
  const std::size_t degree = std::max<std::size_t>(r, static_cast<std::size_t>(deg));
  const auto ni = static_cast<Eigen::Index>(n);
  PolyMatrixFamily fam;
  fam.coeffs.assign(degree + 1, FloatMat::Zero(ni, ni));
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& p = m(i, j).num();
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        double v = p.coeffs()[k].to_double();
        fam.coeffs[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        scale = std::max(scale, std::abs(v));
      }
    }
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& c : fam.coeffs) {
    c /= scale;
    for (Eigen::Index e = 0; e < c.size(); ++e) c.data()[e] += perturbation * normal(rng);
  }
  return fam;
}

}  // namespace

PolyMatrixFamily random_family(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t index) {
  auto rng = trial_stream(seed, index, 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto ni = static_cast<Eigen::Index>(n);
  PolyMatrixFamily fam;
  fam.coeffs.assign(r + 1, FloatMat::Zero(ni, ni));
  for (auto& c : fam.coeffs)
    for (Eigen::Index e = 0; e < c.size(); ++e) c.data()[e] = normal(rng);
  return fam;
}

ExperimentSummary run_experiment(std::size_t n, std::size_t r, std::size_t trials,
                                 const NewtonConfig& config, const ExperimentOptions& options) {
  if (trials < 1) throw Error("run_experiment: trials must be >= 1");
  if (n < 1) throw Error("run_experiment: n must be >= 1");
  ExperimentSummary s;
  s.n = n;
  s.r = r;
  s.trials = trials;
  s.seed = config.seed;
  s.near_type2 = options.near_type2;
  double res_sum = 0.0, comm_sum = 0.0, iter_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    PolyMatrixFamily start = options.near_type2
                                 ? near_type2_family(n, r, config.seed, t, options.perturbation)
                                 : random_family(n, r, config.seed, t);
    s.max_degree_used = std::max(s.max_degree_used, start.degree());
    TrialRecord rec;
    rec.index = t;
    try {
      rec.result = newton_solve(std::move(start), config).second;
    } catch (const NumericalBreakdown&) {
      rec.breakdown = true;
      ++s.breakdown_count;
    }
    if (!rec.breakdown && rec.result.converged) {
      ++s.converged_count;
      if (rec.result.approx_type1) ++s.type1_among_converged;
      s.residual_max = std::max(s.residual_max, rec.result.final_residual_norm);
      s.commutator_max = std::max(s.commutator_max, rec.result.max_pairwise_commutator_norm);
      res_sum += rec.result.final_residual_norm;
      comm_sum += rec.result.max_pairwise_commutator_norm;
      iter_sum += rec.result.iterations;
    }
    if (options.keep_trials) s.records.push_back(rec);
  }
  s.convergence_rate = static_cast<double>(s.converged_count) / static_cast<double>(trials);
  if (s.converged_count > 0) {
    const double c = static_cast<double>(s.converged_count);
    s.type1_fraction_among_converged = static_cast<double>(s.type1_among_converged) / c;
    s.residual_mean = res_sum / c;
    s.commutator_mean = comm_sum / c;
    s.mean_iterations = iter_sum / c;
  }
  return s;
}

}  // namespace dfm::newton
