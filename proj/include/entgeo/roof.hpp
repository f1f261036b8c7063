#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entgeo/measures.hpp"

namespace entgeo {

enum class AverageKind { Arithmetic, Geometric };

const char* average_name(AverageKind a);
AverageKind average_from_name(const std::string& s);

/// Rectangular complex matrix, row-major; carries the k x r isometries
/// that parametrize decompositions.
struct RectMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  RectMatrix() = default;
  RectMatrix(int rows_, int cols_)
      : rows(rows_), cols(cols_), a(static_cast<std::size_t>(rows_) * cols_) {}

  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Pure-state ensemble realizing a density matrix; entries with weight
/// below 1e-14 are dropped.
struct Decomposition {
  std::vector<double> weights;
  std::vector<StateVector> states;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Ensemble from a k x r matrix with orthonormal columns (r = rank of
/// rho): psi~_i = sum_j u_ij sqrt(lambda_j) |e_j>, weights |psi~_i|^2.
/// Every such u yields a valid decomposition of rho, and every size-k
/// decomposition arises this way. Throws if u fails the isometry check
/// (||u^dagger u - I|| > 1e-8) or has fewer columns than the rank.
Decomposition decomposition_from_isometry(const DensityMatrix& rho, const RectMatrix& u);

struct RoofResult {
  double value = 0.0;
  Decomposition best;
  int k = 0;               // ensemble size of the best decomposition found
  int restarts_used = 0;
  bool converged = false;  // best restart stalled before exhausting its budget
  /// "oracle-confirmed" when the two-qubit Wootters closed form agrees
  /// within 2e-3; otherwise "roof-upper-bound".
  std::string bound_kind = "roof-upper-bound";
};

struct RoofOptions {
  long long budget = 20000;  // objective evaluations, split across restarts
  int restarts = 8;
  int k_max = 0;             // 0: default cap min(2r, r^2)
  std::uint64_t seed = 0;
};

/// Convex-roof value min sum p_i M(psi_i) over decompositions of rho,
/// estimated by adaptive coordinate descent on the real parameters of
/// the isometry u with re-orthonormalization after each trial step, with
/// random restarts spread over ensemble sizes k in {r, ..., min(2r, r^2)}.
/// Deterministic per seed. The result never exceeds the plain
/// eigendecomposition average, and is an upper bound on the true roof.
RoofResult roof_measure(const DensityMatrix& rho, ProbeKind probe, AverageKind average,
                        const RoofOptions& options = {});

}  // namespace entgeo
