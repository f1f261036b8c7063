#pragma once

#include <array>
#include <string>

#include "entgeo/linalg.hpp"

namespace entgeo {

/// The two pair probes: the quasi-concurrence and the halved mutual
/// information of a qubit pair.
enum class ProbeKind { QuasiConcurrence, MutualInfoFr };

const char* probe_name(ProbeKind probe);          // "qc" / "fr"
ProbeKind probe_from_name(const std::string& s);  // accepts "qc"/"fr"

/// The four square-rooted eigenvalues of rho * spin_flip(rho), descending
/// and clamped at zero.
struct SqrtEigenvalues {
  std::array<double, 4> lambda;
};

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) for a 2-qubit rho;
/// an involution that preserves Hermiticity, positivity and trace.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Spectrum of sqrt(rho rho~), computed from the Hermitian conjugation
/// sqrt(rho) rho~ sqrt(rho), which shares its nonzero spectrum.
SqrtEigenvalues sqrt_spectrum(const DensityMatrix& rho);

/// lambda1 + lambda2 - lambda3 - lambda4; zero exactly on factorizable
/// pair states, and equal to the concurrence on pure ones.
double quasi_concurrence(const DensityMatrix& rho);

/// max{0, lambda1 - lambda2 - lambda3 - lambda4}.
double wootters_concurrence(const DensityMatrix& rho);

/// Half the mutual information (S(rho_A) + S(rho_B) - S(rho_AB)) / 2 in bits.
double fr_probe(const DensityMatrix& rho_ab);

double probe_value(const DensityMatrix& pair_rho, ProbeKind probe);

/// Probe values over all unordered qubit pairs (A,B), A < B, stored in
/// lexicographic order; symmetric by construction.
struct PairProbeMatrix {
  int n_qubits = 0;
  ProbeKind probe = ProbeKind::QuasiConcurrence;
  std::vector<double> values;

  int pair_count() const { return static_cast<int>(values.size()); }
  /// Value for the unordered pair {a, b}, 1-based.
  double operator()(int a, int b) const;
};

PairProbeMatrix pair_probe_matrix(const StateVector& psi, ProbeKind probe);
PairProbeMatrix pair_probe_matrix(const DensityMatrix& rho, ProbeKind probe);

}  // namespace entgeo
