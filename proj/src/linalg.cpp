#include "entgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entgeo {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kNormTol = 1e-12;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int qubit_count_for_dim(int dim) {
  if (dim < 2 || !is_power_of_two(static_cast<std::size_t>(dim)))
    throw std::invalid_argument("dimension must be a power of two >= 2");
  int n = 0;
  while ((1 << n) < dim) ++n;
  return n;
}

// qubit i (1-based, MSB first) <-> bit position n-i counted from the LSB
inline int bit_pos(int n_qubits, int qubit) { return n_qubits - qubit; }

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (auto& v : c.data()) v *= s;
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix r = m;
  for (auto& v : r.data()) v = std::conj(v);
  return r;
}

Complex trace(const ComplexMatrix& m) {
  Complex t{};
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double max_abs(const ComplexMatrix& m) {
  double mx = 0.0;
  for (const auto& v : m.data()) mx = std::max(mx, std::abs(v));
  return mx;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  double mx = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    mx = std::max(mx, std::abs(a.data()[i] - b.data()[i]));
  return mx;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double mx = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      mx = std::max(mx, std::abs(m(i, j) - std::conj(m(j, i))));
  return mx;
}

bool all_finite(const ComplexMatrix& m) {
  for (const auto& v : m.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1) throw std::invalid_argument("state must have at least one qubit");
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude count does not match qubit count");
  double norm2 = 0.0;
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("amplitudes must be finite");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw std::invalid_argument("state vector is not normalized");
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, PsdCheck psd) {
  const int n = qubit_count_for_dim(m.dim());
  if (!all_finite(m)) throw std::invalid_argument("density matrix entries must be finite");
  if (hermiticity_defect(m) > kHermTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  const Complex tr = trace(m);
  if (std::abs(tr - 1.0) > kTraceTol)
    throw std::invalid_argument("density matrix trace is not one");
  if (psd == PsdCheck::Enforce) {
    const Eigensystem es = hermitian_eigensystem(m);
    if (es.values.back() < -kPsdTol)
      throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return DensityMatrix(std::move(m), n);
}

DensityMatrix projector(const StateVector& psi) {
  const int d = psi.dim();
  ComplexMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix::from_matrix(std::move(m), DensityMatrix::PsdCheck::Skip);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!all_finite(a) || !all_finite(b))
    throw std::invalid_argument("tensor operands must be finite");
  const int da = a.dim(), db = b.dim();
  ComplexMatrix c(da * db);
  for (int ia = 0; ia < da; ++ia)
    for (int ja = 0; ja < da; ++ja) {
      const Complex v = a(ia, ja);
      if (v == Complex{}) continue;
      for (int ib = 0; ib < db; ++ib)
        for (int jb = 0; jb < db; ++jb)
          c(ia * db + ib, ja * db + jb) = v * b(ib, jb);
    }
  return c;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int db = b.dim();
  std::vector<Complex> amps(static_cast<std::size_t>(a.dim()) * db);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < db; ++j) amps[static_cast<std::size_t>(i) * db + j] = a[i] * b[j];
  return StateVector(a.n_qubits() + b.n_qubits(), std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()),
                                    DensityMatrix::PsdCheck::Skip);
}

namespace {

struct KeepPlan {
  std::vector<int> keep_bits;  // bit position of each kept qubit, result-MSB first
  std::vector<int> env_bits;   // bit positions traced out
};

KeepPlan make_keep_plan(int n_qubits, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must not be empty");
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits) + 1, false);
  KeepPlan plan;
  for (int q : keep) {
    if (q < 1 || q > n_qubits) throw std::invalid_argument("qubit index out of range");
    if (seen[static_cast<std::size_t>(q)])
      throw std::invalid_argument("qubit indices must be distinct");
    seen[static_cast<std::size_t>(q)] = true;
    plan.keep_bits.push_back(bit_pos(n_qubits, q));
  }
  for (int q = 1; q <= n_qubits; ++q)
    if (!seen[static_cast<std::size_t>(q)]) plan.env_bits.push_back(bit_pos(n_qubits, q));
  return plan;
}

// Scatter the kept-subsystem index and the environment index into a full
// basis index, honoring the MSB-first qubit order of the result.
inline std::size_t assemble(const KeepPlan& plan, std::size_t kept, std::size_t env) {
  std::size_t idx = 0;
  const int m = static_cast<int>(plan.keep_bits.size());
  for (int j = 0; j < m; ++j)
    idx |= ((kept >> (m - 1 - j)) & 1u) << plan.keep_bits[static_cast<std::size_t>(j)];
  const int e = static_cast<int>(plan.env_bits.size());
  for (int j = 0; j < e; ++j)
    idx |= ((env >> j) & 1u) << plan.env_bits[static_cast<std::size_t>(j)];
  return idx;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  const KeepPlan plan = make_keep_plan(n, keep);
  const int m = static_cast<int>(keep.size());
  const std::size_t dk = std::size_t{1} << m;
  const std::size_t de = std::size_t{1} << (n - m);
  ComplexMatrix out(static_cast<int>(dk));
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      Complex s{};
      for (std::size_t e = 0; e < de; ++e)
        s += rho(static_cast<int>(assemble(plan, i, e)),
                 static_cast<int>(assemble(plan, j, e)));
      out(static_cast<int>(i), static_cast<int>(j)) = s;
    }
  return DensityMatrix::from_matrix(std::move(out), DensityMatrix::PsdCheck::Skip);
}

DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep) {
  const int n = psi.n_qubits();
  const KeepPlan plan = make_keep_plan(n, keep);
  const int m = static_cast<int>(keep.size());
  const std::size_t dk = std::size_t{1} << m;
  const std::size_t de = std::size_t{1} << (n - m);
  ComplexMatrix out(static_cast<int>(dk));
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = i; j < dk; ++j) {
      Complex s{};
      for (std::size_t e = 0; e < de; ++e)
        s += psi[static_cast<int>(assemble(plan, i, e))] *
             std::conj(psi[static_cast<int>(assemble(plan, j, e))]);
      out(static_cast<int>(i), static_cast<int>(j)) = s;
      out(static_cast<int>(j), static_cast<int>(i)) = std::conj(s);
    }
  return DensityMatrix::from_matrix(std::move(out), DensityMatrix::PsdCheck::Skip);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  if (!all_finite(h)) throw std::invalid_argument("matrix entries must be finite");
  if (hermiticity_defect(h) > 1e-10)
    throw std::invalid_argument("matrix is not Hermitian");

  const int n = h.dim();
  // Work on the Hermitian part; forces exact symmetry of the iteration.
  ComplexMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale += std::norm(a(i, j));
  scale = std::sqrt(scale);
  const double stop = std::max(scale, 1.0) * 1e-15;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= stop / n) continue;

        // Unitary U = diag(1, e^{-i phi}) * real Jacobi rotation, built so
        // that U^dagger A U zeroes the (p,q) entry.
        const Complex phase = apq / r;                      // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex em = std::conj(phase);                // e^{-i phi}

        // A <- U^dagger A U, columns then rows.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * em * akq;
          a(k, q) = s * akp + c * em * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * em * vkq;
          v(k, q) = s * vkp + c * em * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  Eigensystem es;
  es.values.reserve(static_cast<std::size_t>(n));
  es.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    es.values.push_back(a(order[static_cast<std::size_t>(k)],
                          order[static_cast<std::size_t>(k)]).real());
    for (int i = 0; i < n; ++i)
      es.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
  }
  return es;
}

double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (const auto& v : rho.matrix().data()) s += std::norm(v);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  double s = 0.0;
  for (double lambda : es.values) {
    if (lambda < 1e-12) continue;  // 0 log 0 := 0, round-off clamped
    s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace entgeo
