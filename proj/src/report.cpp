#include "entgeo/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace entgeo {

ReportFormat format_from_name(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected json or csv)");
}

std::string format_significant(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

const char* kEol = "\n";

std::string complex_pair(Complex v) {
  return "[" + format_significant(v.real()) + "," + format_significant(v.imag()) + "]";
}

void append_pairs_json(std::ostringstream& os, const PairProbeMatrix& pm) {
  os << "[";
  bool first = true;
  for (int a = 1; a <= pm.n_qubits; ++a)
    for (int b = a + 1; b <= pm.n_qubits; ++b) {
      if (!first) os << ",";
      first = false;
      os << "{\"a\":" << a << ",\"b\":" << b
         << ",\"value\":" << format_significant(pm(a, b)) << "}";
    }
  os << "]";
}

}  // namespace

std::string emit_report(const MeasureReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Json) {
    os << "{\"n_qubits\":" << r.n_qubits << ",\"probe\":\"" << probe_name(r.probe)
       << "\",\"pairs\":";
    append_pairs_json(os, r.pairs);
    os << ",\"m\":" << format_significant(r.m) << ",\"g\":" << format_significant(r.g)
       << ",\"normalization\":" << format_significant(r.normalization)
       << ",\"class\":\"" << class_label_name(r.classification)
       << "\",\"homogeneity\":\"" << homogeneity_name(r.homogeneity)
       << "\",\"tolerance\":" << format_significant(r.tolerance)
       << ",\"out_of_range\":" << (r.out_of_range ? "true" : "false") << "}" << kEol;
    return os.str();
  }
  os << "n_qubits,probe,m,g,normalization,class,homogeneity,tolerance,out_of_range";
  for (int a = 1; a <= r.n_qubits; ++a)
    for (int b = a + 1; b <= r.n_qubits; ++b) os << ",pair_" << a << "_" << b;
  os << kEol;
  os << r.n_qubits << "," << probe_name(r.probe) << "," << format_significant(r.m) << ","
     << format_significant(r.g) << "," << format_significant(r.normalization) << ","
     << class_label_name(r.classification) << "," << homogeneity_name(r.homogeneity) << ","
     << format_significant(r.tolerance) << "," << (r.out_of_range ? "true" : "false");
  for (int a = 1; a <= r.n_qubits; ++a)
    for (int b = a + 1; b <= r.n_qubits; ++b) os << "," << format_significant(r.pairs(a, b));
  os << kEol;
  return os.str();
}

std::string emit_report(const RoofResult& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Json) {
    os << "{\"value\":" << format_significant(r.value) << ",\"bound_kind\":\""
       << r.bound_kind << "\",\"k\":" << r.k << ",\"restarts_used\":" << r.restarts_used
       << ",\"converged\":" << (r.converged ? "true" : "false") << "}" << kEol;
    return os.str();
  }
  os << "value,bound_kind,k,restarts_used,converged" << kEol
     << format_significant(r.value) << "," << r.bound_kind << "," << r.k << ","
     << r.restarts_used << "," << (r.converged ? "true" : "false") << kEol;
  return os.str();
}

std::string emit_report(const HopfReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Json) {
    os << "{\"n_qubits\":" << r.n_qubits << ",\"images\":[";
    for (std::size_t i = 0; i < r.images.size(); ++i) {
      const auto& img = r.images[i];
      if (i) os << ",";
      os << "{\"perm\":\"" << img.perm << "\",\"components\":[";
      for (std::size_t c = 0; c < img.components.size(); ++c) {
        if (c) os << ",";
        os << complex_pair(img.components[c]);
      }
      os << "],\"z\":" << format_significant(img.z)
         << ",\"k\":" << format_significant(img.k) << "}";
    }
    os << "]}" << kEol;
    return os.str();
  }
  const std::size_t ncomp = r.images.empty() ? 0 : r.images.front().components.size();
  os << "perm";
  for (std::size_t c = 0; c < ncomp; ++c) os << ",c" << c + 1 << "_re,c" << c + 1 << "_im";
  os << ",z,k" << kEol;
  for (const auto& img : r.images) {
    os << img.perm;
    for (const auto& v : img.components)
      os << "," << format_significant(v.real()) << "," << format_significant(v.imag());
    os << "," << format_significant(img.z) << "," << format_significant(img.k) << kEol;
  }
  return os.str();
}

std::string emit_report(const ScottReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Json) {
    os << "{\"n_qubits\":" << r.n_qubits << ",\"m\":" << r.m
       << ",\"q\":" << format_significant(r.q) << "}" << kEol;
    return os.str();
  }
  os << "n_qubits,m,q" << kEol
     << r.n_qubits << "," << r.m << "," << format_significant(r.q) << kEol;
  return os.str();
}

std::string emit_report(const SweepReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Json) {
    os << "{\"family\":\"" << r.family << "\",\"probe\":\"" << probe_name(r.probe)
       << "\",\"n_qubits\":" << r.n_qubits << ",\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      if (i) os << ",";
      os << "{\"x\":" << format_significant(row.param) << ",\"pairs\":[";
      for (std::size_t p = 0; p < row.pair_values.size(); ++p) {
        if (p) os << ",";
        os << format_significant(row.pair_values[p]);
      }
      os << "],\"m\":" << format_significant(row.m)
         << ",\"g\":" << format_significant(row.g) << "}";
    }
    os << "]}" << kEol;
    return os.str();
  }
  os << "x";
  for (int a = 1; a <= r.n_qubits; ++a)
    for (int b = a + 1; b <= r.n_qubits; ++b) os << ",pair_" << a << "_" << b;
  os << ",m,g" << kEol;
  for (const auto& row : r.rows) {
    os << format_significant(row.param);
    for (double v : row.pair_values) os << "," << format_significant(v);
    os << "," << format_significant(row.m) << "," << format_significant(row.g) << kEol;
  }
  return os.str();
}

}  // namespace entgeo
