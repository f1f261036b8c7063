#include "entgeo/roof.hpp"

#include <algorithm>
#include <cmath>

#include "entgeo/random.hpp"

namespace entgeo {

const char* average_name(AverageKind a) {
  return a == AverageKind::Arithmetic ? "arithmetic" : "geometric";
}

AverageKind average_from_name(const std::string& s) {
  if (s == "arithmetic") return AverageKind::Arithmetic;
  if (s == "geometric") return AverageKind::Geometric;
  throw std::invalid_argument("unknown average '" + s +
                              "' (expected arithmetic or geometric)");
}

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kWeightFloor = 1e-14;

// Modified Gram-Schmidt with one re-orthogonalization pass; deterministic.
void orthonormalize_columns(RectMatrix& u) {
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < u.cols; ++j) {
      for (int i = 0; i < j; ++i) {
        Complex dot{};
        for (int k = 0; k < u.rows; ++k) dot += std::conj(u(k, i)) * u(k, j);
        for (int k = 0; k < u.rows; ++k) u(k, j) -= dot * u(k, i);
      }
      double norm2 = 0.0;
      for (int k = 0; k < u.rows; ++k) norm2 += std::norm(u(k, j));
      if (norm2 < 1e-24) {
        // Degenerate column: reseed with a basis vector and redo the pass.
        for (int k = 0; k < u.rows; ++k) u(k, j) = (k == j % u.rows) ? 1.0 : 0.0;
        --j;
        continue;
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < u.rows; ++k) u(k, j) *= inv;
    }
  }
}

double isometry_defect(const RectMatrix& u) {
  double mx = 0.0;
  for (int i = 0; i < u.cols; ++i)
    for (int j = 0; j < u.cols; ++j) {
      Complex dot{};
      for (int k = 0; k < u.rows; ++k) dot += std::conj(u(k, i)) * u(k, j);
      if (i == j) dot -= 1.0;
      mx = std::max(mx, std::abs(dot));
    }
  return mx;
}

struct RankFactor {
  int rank = 0;
  // columns sqrt(lambda_j) |e_j>, length dim each
  std::vector<std::vector<Complex>> columns;
};

RankFactor rank_factor(const DensityMatrix& rho) {
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  RankFactor f;
  for (std::size_t j = 0; j < es.values.size(); ++j) {
    if (es.values[j] <= kRankTol) continue;
    std::vector<Complex> col(static_cast<std::size_t>(rho.dim()));
    const double root = std::sqrt(es.values[j]);
    for (int i = 0; i < rho.dim(); ++i)
      col[static_cast<std::size_t>(i)] = root * es.vectors(i, static_cast<int>(j));
    f.columns.push_back(std::move(col));
    ++f.rank;
  }
  return f;
}

Decomposition ensemble_from(const RankFactor& f, const RectMatrix& u, int n_qubits) {
  Decomposition d;
  const std::size_t dim = f.columns.front().size();
  for (int i = 0; i < u.rows; ++i) {
    std::vector<Complex> amps(dim);
    for (int j = 0; j < u.cols; ++j) {
      const Complex uij = u(i, j);
      if (uij == Complex{}) continue;
      const auto& col = f.columns[static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < dim; ++k) amps[k] += uij * col[k];
    }
    double w = 0.0;
    for (const auto& a : amps) w += std::norm(a);
    if (w < kWeightFloor) continue;
    const double inv = 1.0 / std::sqrt(w);
    for (auto& a : amps) a *= inv;
    d.weights.push_back(w);
    d.states.emplace_back(n_qubits, std::move(amps));
  }
  return d;
}

}  // namespace

Decomposition decomposition_from_isometry(const DensityMatrix& rho, const RectMatrix& u) {
  const RankFactor f = rank_factor(rho);
  if (f.rank == 0) throw std::invalid_argument("density matrix has numerical rank zero");
  if (u.cols != f.rank)
    throw std::invalid_argument("isometry must have one column per nonzero eigenvalue");
  if (u.rows < u.cols)
    throw std::invalid_argument("isometry needs at least rank-many rows");
  if (isometry_defect(u) > 1e-8)
    throw std::invalid_argument("matrix columns are not orthonormal");

  Decomposition d = ensemble_from(f, u, rho.n_qubits());

  // Reconstruction check: sum p_i |psi_i><psi_i| must reproduce rho.
  ComplexMatrix rebuilt(rho.dim());
  for (int s = 0; s < d.size(); ++s) {
    const auto& psi = d.states[static_cast<std::size_t>(s)];
    const double w = d.weights[static_cast<std::size_t>(s)];
    for (int i = 0; i < rho.dim(); ++i)
      for (int j = 0; j < rho.dim(); ++j)
        rebuilt(i, j) += w * psi[i] * std::conj(psi[j]);
  }
  if (max_abs_diff(rebuilt, rho.matrix()) > 1e-8)
    throw std::logic_error("decomposition does not reconstruct the density matrix");
  return d;
}

namespace {

double pure_measure(const StateVector& psi, ProbeKind probe, AverageKind average) {
  const PairProbeMatrix pm = pair_probe_matrix(psi, probe);
  return average == AverageKind::Arithmetic ? arithmetic_measure(pm)
                                            : geometric_measure(pm);
}

struct Objective {
  const RankFactor* factor;
  int n_qubits;
  ProbeKind probe;
  AverageKind average;

  double operator()(const RectMatrix& u) const {
    const std::size_t dim = factor->columns.front().size();
    double total = 0.0;
    std::vector<Complex> amps(dim);
    for (int i = 0; i < u.rows; ++i) {
      std::fill(amps.begin(), amps.end(), Complex{});
      for (int j = 0; j < u.cols; ++j) {
        const Complex uij = u(i, j);
        if (uij == Complex{}) continue;
        const auto& col = factor->columns[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < dim; ++k) amps[k] += uij * col[k];
      }
      double w = 0.0;
      for (const auto& a : amps) w += std::norm(a);
      if (w < kWeightFloor) continue;
      const double inv = 1.0 / std::sqrt(w);
      std::vector<Complex> normalized(amps);
      for (auto& a : normalized) a *= inv;
      total += w * pure_measure(StateVector(n_qubits, std::move(normalized)), probe, average);
    }
    return total;
  }
};

struct RestartOutcome {
  double value;
  RectMatrix u;
  bool stalled;
};

RestartOutcome run_restart(const Objective& objective, int k, int r, std::uint64_t seed,
                           bool start_at_identity, long long eval_cap) {
  RectMatrix u(k, r);
  if (start_at_identity) {
    for (int j = 0; j < r; ++j) u(j, j) = 1.0;
  } else {
    GaussianSource rng(seed);
    for (auto& v : u.a) v = rng.normal_complex();
    orthonormalize_columns(u);
  }

  double best = objective(u);
  long long evals = 1;
  const int n_params = 2 * k * r;
  std::vector<double> steps(static_cast<std::size_t>(n_params), 0.5);
  bool stalled = false;

  while (evals < eval_cap) {
    bool improved_any = false;
    for (int c = 0; c < n_params && evals < eval_cap; ++c) {
      const int entry = c / 2;
      const bool imaginary = (c % 2) != 0;
      double& step = steps[static_cast<std::size_t>(c)];
      bool improved = false;
      for (double sign : {1.0, -1.0}) {
        RectMatrix trial = u;
        trial.a[static_cast<std::size_t>(entry)] +=
            imaginary ? Complex(0.0, sign * step) : Complex(sign * step, 0.0);
        orthonormalize_columns(trial);
        const double v = objective(trial);
        ++evals;
        if (v < best - 1e-14) {
          best = v;
          u = std::move(trial);
          step = std::min(step * 1.6, 1.0);
          improved = true;
          break;
        }
        if (evals >= eval_cap) break;
      }
      if (!improved) step *= 0.6;
      improved_any = improved_any || improved;
    }
    if (!improved_any &&
        *std::max_element(steps.begin(), steps.end()) < 1e-9) {
      stalled = true;
      break;
    }
  }
  return {best, std::move(u), stalled};
}

}  // namespace

RoofResult roof_measure(const DensityMatrix& rho, ProbeKind probe, AverageKind average,
                        const RoofOptions& options) {
  if (rho.n_qubits() > 4)
    throw std::invalid_argument("convex roof is capped at 4 qubits");
  if (options.budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");

  const RankFactor factor = rank_factor(rho);
  const int r = factor.rank;
  if (r == 0) throw std::invalid_argument("density matrix has numerical rank zero");

  const int k_cap = std::min(options.k_max > 0 ? options.k_max : 2 * r, r * r);
  std::vector<int> sizes;
  for (int k = r; k <= std::max(k_cap, r); ++k) sizes.push_back(k);

  const Objective objective{&factor, rho.n_qubits(), probe, average};

  // Restart 0 starts at the identity isometry, whose first evaluation is
  // the plain eigendecomposition average; descent from there guarantees
  // the result never exceeds it. Ties go to the earliest restart.
  double best_value = 0.0;
  RectMatrix best_u;
  bool best_stalled = false;
  const long long per_restart =
      std::max<long long>(1, options.budget / options.restarts);
  for (int restart = 0; restart < options.restarts; ++restart) {
    const int k = sizes[static_cast<std::size_t>(restart) % sizes.size()];
    // Distinct stream per restart; the mixing constant is the golden-ratio
    // increment used by splitmix64.
    const std::uint64_t stream =
        options.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1));
    RestartOutcome out = run_restart(objective, k, r, stream, restart == 0, per_restart);
    if (restart == 0 || out.value < best_value - 1e-15) {
      best_value = out.value;
      best_u = std::move(out.u);
      best_stalled = out.stalled;
    }
  }

  RoofResult result;
  result.value = best_value;
  result.best = decomposition_from_isometry(rho, best_u);
  result.k = result.best.size();
  result.restarts_used = options.restarts;
  result.converged = best_stalled;
  if (rho.n_qubits() == 2 && probe == ProbeKind::QuasiConcurrence &&
      std::abs(best_value - wootters_concurrence(rho)) <= 2e-3)
    result.bound_kind = "oracle-confirmed";
  return result;
}

}  // namespace entgeo
