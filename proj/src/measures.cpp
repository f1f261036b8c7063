#include "entgeo/measures.hpp"

#include <algorithm>
#include <cmath>

namespace entgeo {

namespace {

constexpr double kGeometricZero = 1e-12;

MeasureReport assemble(PairProbeMatrix pm, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  MeasureReport r;
  r.n_qubits = pm.n_qubits;
  r.probe = pm.probe;
  r.m = arithmetic_measure(pm);
  r.g = geometric_measure(pm);
  r.normalization = normalization(pm.probe, pm.n_qubits);
  r.pair_count = pm.pair_count();
  const auto [label, homogeneity] = classify(pm, tol);
  r.classification = label;
  r.homogeneity = homogeneity;
  r.tolerance = tol;
  r.out_of_range = r.m > 1.0 + tol || r.g > 1.0 + tol;
  r.pairs = std::move(pm);
  return r;
}

}  // namespace

const char* class_label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::FullyFactorizable: return "fully-factorizable";
    case ClassLabel::PartiallyEntangled: return "partially-entangled";
    default: return "globally-entangled";
  }
}

const char* homogeneity_name(Homogeneity h) {
  return h == Homogeneity::Homogeneous ? "homogeneous" : "heterogeneous";
}

double normalization(ProbeKind probe, int n, int d) {
  if (n < 2) throw std::invalid_argument("normalization requires at least 2 qubits");
  if (d != 2) throw std::invalid_argument("qudit normalization out of scope");
  if (probe == ProbeKind::QuasiConcurrence) return 1.0;
  return n == 2 ? 1.0 : static_cast<double>(d);
}

double arithmetic_measure(const PairProbeMatrix& pm) {
  double sum = 0.0;
  for (double v : pm.values) sum += v;
  return normalization(pm.probe, pm.n_qubits) * sum / pm.pair_count();
}

double geometric_measure(const PairProbeMatrix& pm) {
  double log_sum = 0.0;
  for (double v : pm.values) {
    if (v < kGeometricZero) return 0.0;
    log_sum += std::log(v);
  }
  return normalization(pm.probe, pm.n_qubits) * std::exp(log_sum / pm.pair_count());
}

std::pair<ClassLabel, Homogeneity> classify(const PairProbeMatrix& pm, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  const auto [mn, mx] = std::minmax_element(pm.values.begin(), pm.values.end());
  ClassLabel label;
  if (*mn > tol)
    label = ClassLabel::GloballyEntangled;
  else if (*mx <= tol)
    label = ClassLabel::FullyFactorizable;
  else
    label = ClassLabel::PartiallyEntangled;
  const Homogeneity h =
      (*mx - *mn <= tol) ? Homogeneity::Homogeneous : Homogeneity::Heterogeneous;
  return {label, h};
}

MeasureReport measure_report(const StateVector& psi, ProbeKind probe, double tol) {
  if (psi.n_qubits() > 12) throw std::invalid_argument("states are capped at 12 qubits");
  return assemble(pair_probe_matrix(psi, probe), tol);
}

MeasureReport measure_report(const DensityMatrix& rho, ProbeKind probe, double tol) {
  if (rho.n_qubits() > 12) throw std::invalid_argument("states are capped at 12 qubits");
  return assemble(pair_probe_matrix(rho, probe), tol);
}

}  // namespace entgeo
