#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace entgeo {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Largest entry magnitude of m.
double max_abs(const ComplexMatrix& m);
/// Largest entrywise difference |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest deviation from Hermitian symmetry, max |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// Normalized pure state of n qubits. Amplitudes are stored in the
/// computational basis with qubit 1 as the most significant bit, so the
/// amplitude of |q1 q2 ... qn> sits at index q1*2^(n-1) + ... + qn.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over n qubits.
/// Hermiticity and trace are always validated (tolerance 1e-12); the
/// eigenvalue check costs an eigensolve and is skipped on internal paths
/// where positivity holds by construction (partial traces, projectors).
class DensityMatrix {
 public:
  enum class PsdCheck { Enforce, Skip };

  static DensityMatrix from_matrix(ComplexMatrix m, PsdCheck psd = PsdCheck::Enforce);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

 private:
  DensityMatrix(ComplexMatrix m, int n_qubits) : m_(std::move(m)), n_qubits_(n_qubits) {}
  ComplexMatrix m_;
  int n_qubits_ = 0;
};

/// |psi><psi| as a density matrix.
DensityMatrix projector(const StateVector& psi);

/// Kronecker products; the left operand supplies the high-order qubits,
/// so tensor(|0>, |1>) = |01>.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced density matrix on the kept qubits (1-based indices; the i-th
/// entry of keep becomes qubit i of the result). Throws on out-of-range
/// or duplicate indices.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
/// Same reduction computed straight from the amplitudes, without forming
/// the full projector. This is the production path for pure states.
DensityMatrix partial_trace(const StateVector& psi, const std::vector<int>& keep);

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, vectors(:,k) <-> values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Input must be Hermitian within 1e-10. Eigenvalues are
/// returned in descending order; reconstruction holds to 1e-10 in the
/// max norm for the dimensions used here (<= 64).
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Tr[rho^2]; exactly real, equals the sum of |rho_ij|^2.
double purity(const DensityMatrix& rho);

/// Von Neumann entropy in bits: -sum lambda_i log2 lambda_i, with
/// eigenvalues below 1e-12 treated as zero.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace entgeo
