#include "entgeo/states.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entgeo/random.hpp"

namespace entgeo {

namespace {

using nlohmann::json;

std::vector<Complex> zeros(int n_qubits) {
  return std::vector<Complex>(std::size_t{1} << n_qubits);
}

StateVector normalized(int n_qubits, std::vector<Complex> amps) {
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
  return StateVector(n_qubits, std::move(amps));
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Wide enough to absorb 4-decimal truncation of 1/sqrt(2) in input files.
constexpr double kInputNormWindow = 1e-4;

// Renormalization is skipped when the norm already matches to machine
// precision, keeping emitted-then-reparsed values bit-identical.
void renormalize(std::vector<Complex>& amps, double norm2) {
  if (std::abs(norm2 - 1.0) <= 1e-14) return;
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= inv;
}

}  // namespace

StateVector make_ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz requires at least 2 qubits");
  auto amps = zeros(n);
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = r;
  amps.back() = r;
  return StateVector(n, std::move(amps));
}

StateVector make_w(int n) {
  if (n < 2) throw std::invalid_argument("w requires at least 2 qubits");
  auto amps = zeros(n);
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = r;
  return normalized(n, std::move(amps));
}

StateVector make_bell(int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("bell index must be 0..3");
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(4);
  switch (index) {
    case 0: amps[0] = r; amps[3] = r; break;
    case 1: amps[0] = r; amps[3] = -r; break;
    case 2: amps[1] = r; amps[2] = r; break;
    default: amps[1] = r; amps[2] = -r; break;
  }
  return StateVector(2, std::move(amps));
}

StateVector make_epr_pair_product() { return tensor(make_bell(0), make_bell(0)); }

StateVector make_mems_purification(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("mems parameter must lie in [0,1]");
  auto amps = zeros(4);
  amps[0b0101] = std::sqrt(1.0 - x);
  const double c = std::sqrt(x) / 2.0;
  amps[0b0000] += c;
  amps[0b0011] += c;
  amps[0b1100] += c;
  amps[0b1111] += c;
  return normalized(4, std::move(amps));
}

DensityMatrix make_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("werner parameter must lie in [0,1]");
  const StateVector singlet = make_bell(3);
  ComplexMatrix m(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = p * singlet[i] * std::conj(singlet[j]);
    m(i, i) += (1.0 - p) / 4.0;
  }
  return DensityMatrix::from_matrix(std::move(m), DensityMatrix::PsdCheck::Skip);
}

StateVector make_product(const std::vector<std::array<Complex, 2>>& factors) {
  if (factors.empty()) throw std::invalid_argument("product state needs at least one factor");
  bool first = true;
  StateVector acc(1, {1.0, 0.0});
  for (const auto& f : factors) {
    const double n2 = std::norm(f[0]) + std::norm(f[1]);
    if (n2 <= 0.0) throw std::invalid_argument("product factor must be nonzero");
    const double inv = 1.0 / std::sqrt(n2);
    StateVector q(1, {f[0] * inv, f[1] * inv});
    acc = first ? q : tensor(acc, q);
    first = false;
  }
  return acc;
}

StateVector make_random_pure(int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw std::invalid_argument("random state size must be 1..12 qubits");
  GaussianSource rng(seed);
  auto amps = zeros(n);
  for (auto& a : amps) a = rng.normal_complex();
  return normalized(n, std::move(amps));
}

namespace {

Complex read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(ParseError::Code::MalformedJson,
                     "complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

StateVector parse_state_json(const json& j) {
  const auto& amps_json = j.at("amplitudes");
  if (!amps_json.is_array())
    throw ParseError(ParseError::Code::MalformedJson, "amplitudes must be an array");
  const std::size_t len = amps_json.size();
  if (len < 2 || (len & (len - 1)) != 0)
    throw ParseError(ParseError::Code::BadLength, "length must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  if (j.contains("n_qubits") && j.at("n_qubits").get<int>() != n)
    throw ParseError(ParseError::Code::BadLength,
                     "amplitude count does not match n_qubits");
  std::vector<Complex> amps(len);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    amps[i] = read_complex(amps_json[i]);
    norm2 += std::norm(amps[i]);
  }
  if (std::abs(norm2 - 1.0) > kInputNormWindow)
    throw ParseError(ParseError::Code::NotNormalized, "state is not normalized");
  renormalize(amps, norm2);
  return StateVector(n, std::move(amps));
}

DensityMatrix parse_density_json(const json& j) {
  const auto& rows = j.at("rows");
  if (!rows.is_array())
    throw ParseError(ParseError::Code::MalformedJson, "rows must be an array");
  const std::size_t dim = rows.size();
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw ParseError(ParseError::Code::BadLength, "dimension must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (j.contains("n_qubits") && j.at("n_qubits").get<int>() != n)
    throw ParseError(ParseError::Code::BadLength, "row count does not match n_qubits");
  ComplexMatrix m(static_cast<int>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw ParseError(ParseError::Code::BadLength, "density matrix must be square");
    for (std::size_t k = 0; k < dim; ++k)
      m(static_cast<int>(i), static_cast<int>(k)) = read_complex(rows[i][k]);
  }
  if (hermiticity_defect(m) > 1e-9)
    throw ParseError(ParseError::Code::NotHermitian, "not Hermitian");
  // Symmetrize and renormalize exactly, absorbing decimal truncation.
  ComplexMatrix sym(static_cast<int>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      sym(static_cast<int>(i), static_cast<int>(k)) =
          0.5 * (m(static_cast<int>(i), static_cast<int>(k)) +
                 std::conj(m(static_cast<int>(k), static_cast<int>(i))));
  const double tr = trace(sym).real();
  if (std::abs(tr - 1.0) > kInputNormWindow)
    throw ParseError(ParseError::Code::NotNormalized, "density matrix trace is not one");
  if (std::abs(tr - 1.0) > 1e-14) sym = Complex(1.0 / tr, 0.0) * sym;
  try {
    return DensityMatrix::from_matrix(std::move(sym));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Code::NotPositive, e.what());
  }
}

}  // namespace

StateOrDensity parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Code::MalformedJson,
                     std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError(ParseError::Code::MalformedJson, "top-level JSON object expected");
  if (j.contains("amplitudes")) return parse_state_json(j);
  if (j.contains("rows")) return parse_density_json(j);
  throw ParseError(ParseError::Code::MalformedJson,
                   "expected an \"amplitudes\" or \"rows\" field");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ParseError::Code::BadSpec,
                     std::string("expected a number for ") + what + ": '" + s + "'");
  }
}

long parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ParseError::Code::BadSpec,
                     std::string("expected an integer for ") + what + ": '" + s + "'");
  }
}

}  // namespace

StateOrDensity resolve_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  const std::size_t nargs = parts.size() - 1;
  try {
    if (name == "ghz" && nargs == 1)
      return make_ghz(static_cast<int>(parse_int(parts[1], "ghz size")));
    if (name == "w" && nargs == 1)
      return make_w(static_cast<int>(parse_int(parts[1], "w size")));
    if (name == "bell" && nargs == 1)
      return make_bell(static_cast<int>(parse_int(parts[1], "bell index")));
    if (name == "epr_pair_product" && nargs == 0) return make_epr_pair_product();
    if (name == "mems" && nargs == 1)
      return make_mems_purification(parse_real(parts[1], "mems parameter"));
    if (name == "werner" && nargs == 1)
      return make_werner(parse_real(parts[1], "werner parameter"));
    if (name == "random" && nargs == 2)
      return make_random_pure(static_cast<int>(parse_int(parts[1], "random size")),
                              static_cast<std::uint64_t>(parse_int(parts[2], "random seed")));
    if (name == "product" && nargs == 1) {
      std::vector<std::array<Complex, 2>> factors;
      for (const auto& f : split(parts[1], ';')) {
        const auto nums = split(f, ',');
        if (nums.size() != 4)
          throw ParseError(ParseError::Code::BadSpec,
                           "each product factor needs 4 numbers: re0,im0,re1,im1");
        factors.push_back({Complex(parse_real(nums[0], "factor"), parse_real(nums[1], "factor")),
                           Complex(parse_real(nums[2], "factor"), parse_real(nums[3], "factor"))});
      }
      return make_product(factors);
    }
    if (name == "amps" && nargs == 1) {
      const auto nums = split(parts[1], ',');
      if (nums.size() % 2 != 0)
        throw ParseError(ParseError::Code::BadSpec, "amps needs re,im pairs");
      const std::size_t len = nums.size() / 2;
      if (len < 2 || (len & (len - 1)) != 0)
        throw ParseError(ParseError::Code::BadLength, "length must be a power of two");
      std::vector<Complex> amps(len);
      double norm2 = 0.0;
      for (std::size_t i = 0; i < len; ++i) {
        amps[i] = Complex(parse_real(nums[2 * i], "amplitude"),
                          parse_real(nums[2 * i + 1], "amplitude"));
        norm2 += std::norm(amps[i]);
      }
      if (std::abs(norm2 - 1.0) > kInputNormWindow)
        throw ParseError(ParseError::Code::NotNormalized, "state is not normalized");
      int n = 0;
      while ((std::size_t{1} << n) < len) ++n;
      renormalize(amps, norm2);
      return StateVector(n, std::move(amps));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Code::BadSpec, e.what());
  }
  throw ParseError(ParseError::Code::BadSpec, "unknown state spec '" + spec + "'");
}

std::string to_json(const StateVector& psi) {
  std::ostringstream os;
  os << "{\"n_qubits\":" << psi.n_qubits() << ",\"amplitudes\":[";
  for (int i = 0; i < psi.dim(); ++i) {
    if (i) os << ',';
    os << '[' << fmt17(psi[i].real()) << ',' << fmt17(psi[i].imag()) << ']';
  }
  os << "]}";
  return os.str();
}

std::string to_json(const DensityMatrix& rho) {
  std::ostringstream os;
  os << "{\"n_qubits\":" << rho.n_qubits() << ",\"rows\":[";
  for (int i = 0; i < rho.dim(); ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < rho.dim(); ++j) {
      if (j) os << ',';
      os << '[' << fmt17(rho(i, j).real()) << ',' << fmt17(rho(i, j).imag()) << ']';
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

}  // namespace entgeo
