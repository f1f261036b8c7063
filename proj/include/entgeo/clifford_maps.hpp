#pragma once

#include <vector>

#include "entgeo/linalg.hpp"

namespace entgeo {

/// Image of a two-qubit state under the quaternion-pair map
/// (q1, q2) -> (2 q2 conj(q1), |q1|^2 - |q2|^2). The complex pair packs the
/// (1, i2) slots of the quaternion: c_off carries the off-diagonal of the
/// reduced one-qubit matrix, |c_conc| is the concurrence, and z the
/// population difference. For a normalized input
/// |c_off|^2 + |c_conc|^2 + z^2 = 1.
struct MapImage2 {
  Complex c_off;
  Complex c_conc;
  double z;
};

/// Image of a three-qubit state under the octonion-pair map
/// (o1, o2) -> (2 o2 conj(o1), |o1|^2 - |o2|^2), stored as the four complex
/// component slots (1, i2, i4, i6). For a normalized input
/// |2 c1|^2 + |2 c2|^2 + |2 c3|^2 + |2 c4|^2 + z^2 = 1.
struct MapImage3 {
  Complex c1, c2, c3, c4;
  double z;
};

/// Bijection on qubit labels {1..n}; image(i) is where qubit i moves.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return image_; }

  Permutation inverse() const;
  /// this after other: (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation& o) const { return image_ == o.image_; }

 private:
  std::vector<int> image_;
};

/// All n! permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

/// Relabel qubits: the amplitude of bitstring b moves to the bitstring
/// where bit i of b sits at position perm(i).
StateVector permute_state(const StateVector& psi, const Permutation& perm);

MapImage2 two_qubit_map(const StateVector& psi);
/// The map with the two qubit labels exchanged; c_conc is identical.
MapImage2 two_qubit_map_swapped(const StateVector& psi);

MapImage3 three_qubit_map(const StateVector& psi);

/// The map of the relabeled state, computed from explicit per-permutation
/// coefficient formulas (not by permuting amplitudes). Agrees with
/// three_qubit_map(permute_state(psi, perm)) to round-off.
MapImage3 permuted_three_qubit_map(const StateVector& psi, const Permutation& perm);

/// The qubit whose reduced density matrix the permuted map exposes:
/// perm.inverse()(1).
int map_qubit(const Permutation& perm);

/// Squared norm of the entanglement slots; equals 2(1 - Tr[rho_k^2]) for
/// the map's distinguished qubit k. Both component-sum and complement
/// forms are evaluated and must agree within 1e-10.
double k_invariant(const MapImage2& image);
double k_invariant(const MapImage3& image);

/// Meyer-Wallach-Brennen global entanglement: the average of
/// 2(1 - Tr[rho_i^2]) over the N single-qubit reductions. For N <= 4 the
/// N!-permutation average is evaluated as well and cross-checked.
double meyer_wallach(const StateVector& psi);

/// The N!-permutation form of the same average, feasible for N <= 4.
double meyer_wallach_permutation_average(const StateVector& psi);

/// Scott's subset measure: the average over all size-m subsets S of
/// 2^m/(2^m - 1) (1 - Tr[rho_S^2]), for 1 <= m <= floor(N/2).
double scott_q(const StateVector& psi, int m);

}  // namespace entgeo
