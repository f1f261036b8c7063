#pragma once

#include <string>
#include <vector>

#include "entgeo/measures.hpp"
#include "entgeo/roof.hpp"

namespace entgeo {

enum class ReportFormat { Json, Csv };

ReportFormat format_from_name(const std::string& s);  // "json" / "csv"

/// Formats a double with 12 significant digits; all report numerics go
/// through this so serialization is byte-stable.
std::string format_significant(double v);

/// One map image as reported by the hopf command.
struct HopfImage {
  std::string perm;                 // one-line label, e.g. "213"
  std::vector<Complex> components;  // c_off,c_conc (2 qubits) or c1..c4
  double z = 0.0;
  double k = 0.0;
};

struct HopfReport {
  int n_qubits = 0;
  std::vector<HopfImage> images;
};

struct ScottReport {
  int n_qubits = 0;
  int m = 0;
  double q = 0.0;
};

struct SweepRow {
  double param = 0.0;
  std::vector<double> pair_values;
  double m = 0.0;
  double g = 0.0;
};

struct SweepReport {
  std::string family;
  ProbeKind probe = ProbeKind::MutualInfoFr;
  int n_qubits = 0;
  std::vector<SweepRow> rows;
};

std::string emit_report(const MeasureReport& r, ReportFormat format);
std::string emit_report(const RoofResult& r, ReportFormat format);
std::string emit_report(const HopfReport& r, ReportFormat format);
std::string emit_report(const ScottReport& r, ReportFormat format);
std::string emit_report(const SweepReport& r, ReportFormat format);

}  // namespace entgeo
