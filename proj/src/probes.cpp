#include "entgeo/probes.hpp"

#include <algorithm>
#include <cmath>

namespace entgeo {

const char* probe_name(ProbeKind probe) {
  return probe == ProbeKind::QuasiConcurrence ? "qc" : "fr";
}

ProbeKind probe_from_name(const std::string& s) {
  if (s == "qc") return ProbeKind::QuasiConcurrence;
  if (s == "fr") return ProbeKind::MutualInfoFr;
  throw std::invalid_argument("unknown probe '" + s + "' (expected qc or fr)");
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2)
    throw std::invalid_argument("spin flip requires a 2-qubit density matrix");
  // sigma_y x sigma_y = antidiag(-1, 1, 1, -1), real.
  static const double yy[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix out(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out(i, j) = yy[i] * yy[j] * std::conj(rho(3 - i, 3 - j));
  return out;
}

namespace {

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const Eigensystem es = hermitian_eigensystem(m);
  const int n = m.dim();
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = std::max(es.values[static_cast<std::size_t>(k)], 0.0);
    const double root = std::sqrt(lambda);
    if (root == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const Complex vik = es.vectors(i, k);
      if (vik == Complex{}) continue;
      for (int j = 0; j < n; ++j)
        out(i, j) += root * vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

}  // namespace

SqrtEigenvalues sqrt_spectrum(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2)
    throw std::invalid_argument("spectrum requires a 2-qubit density matrix");
  const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  ComplexMatrix m = root * spin_flip(rho) * root;
  // Force exact Hermitian symmetry before the eigensolve.
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  const Eigensystem es = hermitian_eigensystem(m);
  SqrtEigenvalues out;
  for (int k = 0; k < 4; ++k) {
    // Eigenvalues at the round-off floor are exact zeros of the underlying
    // matrix; the square root would otherwise inflate that noise to 1e-8.
    const double e = es.values[static_cast<std::size_t>(k)];
    out.lambda[static_cast<std::size_t>(k)] = e < 1e-14 ? 0.0 : std::sqrt(e);
  }
  return out;
}

double quasi_concurrence(const DensityMatrix& rho) {
  const auto l = sqrt_spectrum(rho).lambda;
  return l[0] + l[1] - l[2] - l[3];
}

double wootters_concurrence(const DensityMatrix& rho) {
  const auto l = sqrt_spectrum(rho).lambda;
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double fr_probe(const DensityMatrix& rho_ab) {
  if (rho_ab.n_qubits() != 2)
    throw std::invalid_argument("probe requires a 2-qubit density matrix");
  const double s_a = von_neumann_entropy(partial_trace(rho_ab, {1}));
  const double s_b = von_neumann_entropy(partial_trace(rho_ab, {2}));
  const double s_ab = von_neumann_entropy(rho_ab);
  return 0.5 * (s_a + s_b - s_ab);
}

double probe_value(const DensityMatrix& pair_rho, ProbeKind probe) {
  return probe == ProbeKind::QuasiConcurrence ? quasi_concurrence(pair_rho)
                                              : fr_probe(pair_rho);
}

double PairProbeMatrix::operator()(int a, int b) const {
  if (a == b || a < 1 || b < 1 || a > n_qubits || b > n_qubits)
    throw std::invalid_argument("qubit index out of range");
  if (a > b) std::swap(a, b);
  // lexicographic offset of pair (a, b), a < b, within 1..n
  const int before = (a - 1) * n_qubits - (a - 1) * a / 2;
  return values[static_cast<std::size_t>(before + (b - a - 1))];
}

namespace {

template <typename Source>
PairProbeMatrix build_pair_matrix(const Source& src, int n, ProbeKind probe) {
  if (n < 2) throw std::invalid_argument("pair probes require at least 2 qubits");
  PairProbeMatrix pm;
  pm.n_qubits = n;
  pm.probe = probe;
  pm.values.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      pm.values.push_back(probe_value(partial_trace(src, {a, b}), probe));
  return pm;
}

}  // namespace

PairProbeMatrix pair_probe_matrix(const StateVector& psi, ProbeKind probe) {
  return build_pair_matrix(psi, psi.n_qubits(), probe);
}

PairProbeMatrix pair_probe_matrix(const DensityMatrix& rho, ProbeKind probe) {
  return build_pair_matrix(rho, rho.n_qubits(), probe);
}

}  // namespace entgeo
