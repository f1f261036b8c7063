#pragma once

#include <string>
#include <utility>

#include "entgeo/probes.hpp"

namespace entgeo {

enum class ClassLabel { FullyFactorizable, PartiallyEntangled, GloballyEntangled };
enum class Homogeneity { Homogeneous, Heterogeneous };

const char* class_label_name(ClassLabel label);    // "fully-factorizable", ...
const char* homogeneity_name(Homogeneity h);       // "homogeneous" / "heterogeneous"

/// Normalization factor that sets the measure to one on GHZ states:
/// 1 + (d-1)(1 - delta_{2,N}) for the Fr probe, 1 for the
/// quasi-concurrence. Only d = 2 is supported.
double normalization(ProbeKind probe, int n, int d = 2);

/// Normalized mean of the pair probe values.
double arithmetic_measure(const PairProbeMatrix& pm);

/// Normalized geometric mean, evaluated in log space; exactly zero when
/// any pair value falls below 1e-12.
double geometric_measure(const PairProbeMatrix& pm);

/// GloballyEntangled if every pair value exceeds tol, FullyFactorizable
/// if none does, PartiallyEntangled otherwise. Homogeneous when the
/// absolute spread of pair values is at most tol.
std::pair<ClassLabel, Homogeneity> classify(const PairProbeMatrix& pm, double tol);

struct MeasureReport {
  int n_qubits = 0;
  ProbeKind probe = ProbeKind::QuasiConcurrence;
  PairProbeMatrix pairs;
  double m = 0.0;
  double g = 0.0;
  double normalization = 0.0;
  int pair_count = 0;
  ClassLabel classification = ClassLabel::FullyFactorizable;
  Homogeneity homogeneity = Homogeneity::Homogeneous;
  double tolerance = 0.0;
  /// Set when m or g exceeds one beyond tolerance; values are reported
  /// as computed, never clamped.
  bool out_of_range = false;
};

MeasureReport measure_report(const StateVector& psi, ProbeKind probe, double tol = 1e-9);
MeasureReport measure_report(const DensityMatrix& rho, ProbeKind probe, double tol = 1e-9);

}  // namespace entgeo
