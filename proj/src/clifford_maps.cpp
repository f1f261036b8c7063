#include "entgeo/clifford_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entgeo {

namespace {

constexpr double kCrossCheckTol = 1e-10;

double abs2(Complex v) { return std::norm(v); }

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation is not a bijection on 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(image_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(out));
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

StateVector permute_state(const StateVector& psi, const Permutation& perm) {
  const int n = psi.n_qubits();
  if (perm.size() != n)
    throw std::invalid_argument("permutation size does not match qubit count");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> out(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t nb = 0;
    for (int i = 1; i <= n; ++i) {
      const std::size_t bit = (b >> (n - i)) & 1u;
      nb |= bit << (n - perm(i));
    }
    out[nb] = psi[static_cast<int>(b)];
  }
  return StateVector(n, std::move(out));
}

MapImage2 two_qubit_map(const StateVector& psi) {
  if (psi.n_qubits() != 2) throw std::invalid_argument("map requires a 2-qubit state");
  const Complex a0 = psi[0], a1 = psi[1], b0 = psi[2], b1 = psi[3];
  MapImage2 img;
  img.c_off = 2.0 * (b0 * std::conj(a0) + b1 * std::conj(a1));
  img.c_conc = 2.0 * (b1 * a0 - b0 * a1);
  img.z = abs2(a0) + abs2(a1) - abs2(b0) - abs2(b1);
  return img;
}

MapImage2 two_qubit_map_swapped(const StateVector& psi) {
  if (psi.n_qubits() != 2) throw std::invalid_argument("map requires a 2-qubit state");
  // Exchange the qubit labels: a1 <-> b0.
  const Complex a0 = psi[0], a1 = psi[2], b0 = psi[1], b1 = psi[3];
  MapImage2 img;
  img.c_off = 2.0 * (b0 * std::conj(a0) + b1 * std::conj(a1));
  img.c_conc = 2.0 * (b1 * a0 - b0 * a1);
  img.z = abs2(a0) + abs2(a1) - abs2(b0) - abs2(b1);
  return img;
}

namespace {

struct Amps3 {
  Complex a0, a1, b0, b1, d0, d1, g0, g1;
};

Amps3 load3(const StateVector& psi) {
  return {psi[0], psi[1], psi[2], psi[3], psi[4], psi[5], psi[6], psi[7]};
}

MapImage3 base_map(const Amps3& v) {
  const auto c = [](Complex x) { return std::conj(x); };
  MapImage3 img;
  img.c1 = c(v.a0) * v.d0 + v.d1 * c(v.a1) + v.g0 * c(v.b0) + c(v.b1) * v.g1;
  img.c2 = -v.a1 * v.d0 + v.d1 * v.a0 - (c(v.b1) * c(v.g0) - c(v.g1) * c(v.b0));
  img.c3 = -v.b0 * v.d0 + v.g0 * v.a0 - (c(v.a1) * c(v.g1) - c(v.d1) * c(v.b1));
  img.c4 = -c(v.d1) * c(v.b0) + c(v.a1) * c(v.g0) - (v.b1 * v.d0 - v.g1 * v.a0);
  img.z = abs2(v.a0) + abs2(v.a1) + abs2(v.b0) + abs2(v.b1) -
          (abs2(v.d0) + abs2(v.d1) + abs2(v.g0) + abs2(v.g1));
  return img;
}

}  // namespace

MapImage3 three_qubit_map(const StateVector& psi) {
  if (psi.n_qubits() != 3) throw std::invalid_argument("map requires a 3-qubit state");
  MapImage3 img = base_map(load3(psi));
  // z must reproduce the population difference of the first qubit.
  const DensityMatrix rho1 = partial_trace(psi, {1});
  const double z_rho = rho1(0, 0).real() - rho1(1, 1).real();
  if (std::abs(img.z - z_rho) > 1e-12)
    throw std::logic_error("map z component disagrees with the reduced density matrix");
  return img;
}

MapImage3 permuted_three_qubit_map(const StateVector& psi, const Permutation& perm) {
  if (psi.n_qubits() != 3) throw std::invalid_argument("map requires a 3-qubit state");
  if (perm.size() != 3) throw std::invalid_argument("permutation must act on 3 qubits");
  const Amps3 v = load3(psi);
  const auto c = [](Complex x) { return std::conj(x); };
  const auto code = [&perm] { return perm(1) * 100 + perm(2) * 10 + perm(3); }();

  // Each case writes out the map coefficients after the corresponding
  // relabeling of the amplitudes; the groupings mirror the unpermuted
  // formulas term by term.
  MapImage3 img;
  switch (code) {
    case 123:
      return three_qubit_map(psi);
    case 213:  // exchange qubits 1,2: b0<->d0, b1<->d1
      img.c1 = c(v.a0) * v.b0 + v.b1 * c(v.a1) + v.g0 * c(v.d0) + c(v.d1) * v.g1;
      img.c2 = -v.a1 * v.b0 + v.b1 * v.a0 - (c(v.d1) * c(v.g0) - c(v.g1) * c(v.d0));
      img.c3 = -v.d0 * v.b0 + v.g0 * v.a0 - (c(v.a1) * c(v.g1) - c(v.b1) * c(v.d1));
      img.c4 = -c(v.b1) * c(v.d0) + c(v.a1) * c(v.g0) - (v.d1 * v.b0 - v.g1 * v.a0);
      img.z = abs2(v.a0) + abs2(v.a1) + abs2(v.d0) + abs2(v.d1) -
              (abs2(v.b0) + abs2(v.b1) + abs2(v.g0) + abs2(v.g1));
      break;
    case 321:  // exchange qubits 1,3: a1<->d0, b1<->g0
      img.c1 = c(v.a0) * v.a1 + v.d1 * c(v.d0) + v.b1 * c(v.b0) + c(v.g0) * v.g1;
      img.c2 = -v.d0 * v.a1 + v.d1 * v.a0 - (c(v.g0) * c(v.b1) - c(v.g1) * c(v.b0));
      img.c3 = -v.b0 * v.a1 + v.b1 * v.a0 - (c(v.d0) * c(v.g1) - c(v.d1) * c(v.g0));
      img.c4 = -c(v.d1) * c(v.b0) + c(v.d0) * c(v.b1) - (v.g0 * v.a1 - v.g1 * v.a0);
      img.z = abs2(v.a0) + abs2(v.d0) + abs2(v.b0) + abs2(v.g0) -
              (abs2(v.a1) + abs2(v.d1) + abs2(v.b1) + abs2(v.g1));
      break;
    case 132:  // exchange qubits 2,3: a1<->b0, d1<->g0
      img.c1 = c(v.a0) * v.d0 + v.g0 * c(v.b0) + v.d1 * c(v.a1) + c(v.b1) * v.g1;
      img.c2 = -v.b0 * v.d0 + v.g0 * v.a0 - (c(v.b1) * c(v.d1) - c(v.g1) * c(v.a1));
      img.c3 = -v.a1 * v.d0 + v.d1 * v.a0 - (c(v.b0) * c(v.g1) - c(v.g0) * c(v.b1));
      img.c4 = -c(v.g0) * c(v.a1) + c(v.b0) * c(v.d1) - (v.b1 * v.d0 - v.g1 * v.a0);
      img.z = abs2(v.a0) + abs2(v.a1) + abs2(v.b0) + abs2(v.b1) -
              (abs2(v.d0) + abs2(v.d1) + abs2(v.g0) + abs2(v.g1));
      break;
    case 312:  // cycle: map coefficients read through a1->d0, b0->a1, b1->d1,
               // d0->b0, d1->g0, g0->b1
      img.c1 = c(v.a0) * v.b0 + v.g0 * c(v.d0) + v.b1 * c(v.a1) + c(v.d1) * v.g1;
      img.c2 = -v.d0 * v.b0 + v.g0 * v.a0 - (c(v.d1) * c(v.b1) - c(v.g1) * c(v.a1));
      img.c3 = -v.a1 * v.b0 + v.b1 * v.a0 - (c(v.d0) * c(v.g1) - c(v.g0) * c(v.d1));
      img.c4 = -c(v.g0) * c(v.a1) + c(v.d0) * c(v.b1) - (v.d1 * v.b0 - v.g1 * v.a0);
      img.z = abs2(v.a0) + abs2(v.a1) + abs2(v.d0) + abs2(v.d1) -
              (abs2(v.b0) + abs2(v.b1) + abs2(v.g0) + abs2(v.g1));
      break;
    case 231:  // cycle: map coefficients read through a1->b0, b0->d0, b1->g0,
               // d0->a1, d1->b1, g0->d1
      img.c1 = c(v.a0) * v.a1 + v.b1 * c(v.b0) + v.d1 * c(v.d0) + c(v.g0) * v.g1;
      img.c2 = -v.b0 * v.a1 + v.b1 * v.a0 - (c(v.g0) * c(v.d1) - c(v.g1) * c(v.d0));
      img.c3 = -v.d0 * v.a1 + v.d1 * v.a0 - (c(v.b0) * c(v.g1) - c(v.b1) * c(v.g0));
      img.c4 = -c(v.b1) * c(v.d0) + c(v.b0) * c(v.d1) - (v.g0 * v.a1 - v.g1 * v.a0);
      img.z = abs2(v.a0) + abs2(v.b0) + abs2(v.d0) + abs2(v.g0) -
              (abs2(v.a1) + abs2(v.b1) + abs2(v.d1) + abs2(v.g1));
      break;
    default:
      throw std::logic_error("unreachable permutation code");
  }
  return img;
}

int map_qubit(const Permutation& perm) { return perm.inverse()(1); }

double k_invariant(const MapImage2& image) {
  const double sum_form = abs2(image.c_conc);
  const double complement_form = 1.0 - abs2(image.c_off) - image.z * image.z;
  if (std::abs(sum_form - complement_form) > kCrossCheckTol)
    throw std::logic_error("map image violates the K-invariant identity");
  return sum_form;
}

double k_invariant(const MapImage3& image) {
  const double sum_form =
      abs2(2.0 * image.c2) + abs2(2.0 * image.c3) + abs2(2.0 * image.c4);
  const double complement_form = 1.0 - abs2(2.0 * image.c1) - image.z * image.z;
  if (std::abs(sum_form - complement_form) > kCrossCheckTol)
    throw std::logic_error("map image violates the K-invariant identity");
  return sum_form;
}

namespace {

double linear_entropy_term(const StateVector& psi, int qubit) {
  return 2.0 * (1.0 - purity(partial_trace(psi, {qubit})));
}

}  // namespace

double meyer_wallach_permutation_average(const StateVector& psi) {
  const int n = psi.n_qubits();
  if (n < 2) throw std::invalid_argument("measure requires at least 2 qubits");
  if (n > 4) throw std::invalid_argument("permutation average is capped at 4 qubits");
  double sum = 0.0;
  int count = 0;
  for (const auto& perm : symmetric_group(n)) {
    const StateVector relabeled = permute_state(psi, perm);
    sum += linear_entropy_term(relabeled, 1);
    ++count;
  }
  return sum / count;
}

double meyer_wallach(const StateVector& psi) {
  const int n = psi.n_qubits();
  if (n < 2) throw std::invalid_argument("measure requires at least 2 qubits");
  double sum = 0.0;
  for (int q = 1; q <= n; ++q) sum += linear_entropy_term(psi, q);
  const double value = sum / n;
  if (n <= 4) {
    const double via_perms = meyer_wallach_permutation_average(psi);
    if (std::abs(via_perms - value) > 1e-12)
      throw std::logic_error("permutation average disagrees with the purity average");
  }
  return value;
}

double scott_q(const StateVector& psi, int m) {
  const int n = psi.n_qubits();
  if (n < 2) throw std::invalid_argument("measure requires at least 2 qubits");
  if (m < 1 || m > n / 2)
    throw std::invalid_argument("subset size must lie in 1..floor(N/2)");

  const double kernel_scale =
      static_cast<double>(1 << m) / (static_cast<double>(1 << m) - 1.0);
  // Fixed lexicographic subset order keeps the summation reproducible.
  std::vector<int> subset(static_cast<std::size_t>(m));
  std::iota(subset.begin(), subset.end(), 1);
  double sum = 0.0;
  long count = 0;
  while (true) {
    sum += kernel_scale * (1.0 - purity(partial_trace(psi, subset)));
    ++count;
    int i = m - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - m + 1 + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return sum / static_cast<double>(count);
}

}  // namespace entgeo
