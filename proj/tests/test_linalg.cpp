#include <doctest.h>

#include <algorithm>

#include "entgeo/linalg.hpp"
#include "entgeo/states.hpp"
#include "oracles.hpp"

using namespace entgeo;

namespace {

DensityMatrix diag_density(std::vector<double> probs) {
  ComplexMatrix m(static_cast<int>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i)
    m(static_cast<int>(i), static_cast<int>(i)) = probs[i];
  return DensityMatrix::from_matrix(std::move(m), DensityMatrix::PsdCheck::Skip);
}

}  // namespace

TEST_CASE("tensor: identity and basis cases") {
  const ComplexMatrix i4 = tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(max_abs_diff(i4, ComplexMatrix::identity(4)) == 0.0);

  const StateVector zero(1, {1.0, 0.0});
  const StateVector one(1, {0.0, 1.0});
  const StateVector zo = tensor(zero, one);
  CHECK(zo.dim() == 4);
  CHECK(std::abs(zo[1] - Complex(1.0)) == 0.0);
  CHECK(std::abs(zo[0]) == 0.0);
  CHECK(std::abs(zo[2]) == 0.0);
  CHECK(std::abs(zo[3]) == 0.0);
}

TEST_CASE("tensor: sigma_y x sigma_y matches the hand-expanded antidiagonal") {
  const ComplexMatrix yy = tensor(oracles::pauli_y(), oracles::pauli_y());
  ComplexMatrix expected(4);
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_abs_diff(yy, expected) == 0.0);
}

TEST_CASE("partial_trace: GHZ3 single-qubit reduction is maximally mixed") {
  const DensityMatrix rho1 = partial_trace(projector(make_ghz(3)), {1});
  CHECK(rho1.dim() == 2);
  CHECK(rho1(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho1(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(rho1(0, 1)) < 1e-15);
}

TEST_CASE("partial_trace: product factorization recovers the factor") {
  GaussianSource rng(41);
  const DensityMatrix a = oracles::random_density(1, rng);
  const DensityMatrix b = oracles::random_density(2, rng);
  const DensityMatrix ab = tensor(a, b);
  CHECK(max_abs_diff(partial_trace(ab, {1}).matrix(), a.matrix()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(ab, {2, 3}).matrix(), b.matrix()) < 1e-14);
}

TEST_CASE("partial_trace: W3 reduction from direct amplitude expansion") {
  // P(q1 = 0) collects the |001> and |010> amplitudes of the W state.
  const StateVector w = make_w(3);
  const double p0 = std::norm(w[1]) + std::norm(w[2]);
  const double p1 = std::norm(w[4]);
  const DensityMatrix rho1 = partial_trace(w, {1});
  CHECK(rho1(0, 0).real() == doctest::Approx(p0).epsilon(1e-12));
  CHECK(rho1(1, 1).real() == doctest::Approx(p1).epsilon(1e-12));
  CHECK(p0 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partial_trace: pure-state and projector paths agree") {
  const StateVector psi = make_random_pure(4, 99);
  const DensityMatrix via_projector = partial_trace(projector(psi), {2, 4});
  const DensityMatrix direct = partial_trace(psi, {2, 4});
  CHECK(max_abs_diff(via_projector.matrix(), direct.matrix()) < 1e-13);
}

TEST_CASE("partial_trace: index validation") {
  const DensityMatrix rho = projector(make_ghz(2));
  CHECK_THROWS_WITH_AS(partial_trace(rho, {3}), "qubit index out of range",
                       std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
}

TEST_CASE("partial_trace preserves trace and Hermiticity") {
  GaussianSource rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = oracles::random_density(3, rng);
    const DensityMatrix red = partial_trace(rho, {1, 3});
    CHECK(std::abs(trace(red.matrix()) - Complex(1.0)) < 1e-12);
    CHECK(hermiticity_defect(red.matrix()) < 1e-12);
  }
}

TEST_CASE("partial_trace: complementary reductions share nonzero spectra") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateVector psi = make_random_pure(5, 1000 + seed);
    const auto left = hermitian_eigensystem(partial_trace(psi, {1, 2}).matrix());
    const auto right = hermitian_eigensystem(partial_trace(psi, {3, 4, 5}).matrix());
    // dim 4 vs dim 8: the top four of the larger side must match, the rest vanish
    for (std::size_t i = 0; i < left.values.size(); ++i)
      CHECK(std::abs(left.values[i] - right.values[i]) < 1e-10);
    for (std::size_t i = left.values.size(); i < right.values.size(); ++i)
      CHECK(std::abs(right.values[i]) < 1e-10);
  }
}

TEST_CASE("hermitian_eigensystem: fixed spectra") {
  const auto es = hermitian_eigensystem(diag_density({0.25, 0.75}).matrix());
  CHECK(es.values[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(es.values[1] == doctest::Approx(0.25).epsilon(1e-14));

  ComplexMatrix sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const auto pauli = hermitian_eigensystem(sx);
  CHECK(pauli.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pauli.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigensystem: rejects non-Hermitian input") {
  ComplexMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensystem(bad), std::invalid_argument);
}

TEST_CASE("hermitian_eigensystem: orthonormality and reconstruction") {
  GaussianSource rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 2 + trial % 15;  // 2..16
    const ComplexMatrix h = oracles::random_hermitian(dim, rng);
    const Eigensystem es = hermitian_eigensystem(h);

    const ComplexMatrix vhv = adjoint(es.vectors) * es.vectors;
    REQUIRE(max_abs_diff(vhv, ComplexMatrix::identity(dim)) < 1e-10);

    ComplexMatrix lambda(dim);
    for (int i = 0; i < dim; ++i) lambda(i, i) = es.values[static_cast<std::size_t>(i)];
    const ComplexMatrix rebuilt = es.vectors * lambda * adjoint(es.vectors);
    REQUIRE(max_abs_diff(rebuilt, h) < 1e-10);

    REQUIRE(std::is_sorted(es.values.rbegin(), es.values.rend()));
  }
}

TEST_CASE("purity: fixed values") {
  const StateVector zero(1, {1.0, 0.0});
  CHECK(purity(projector(zero)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(diag_density({0.5, 0.5})) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(purity(diag_density({2.0 / 3.0, 1.0 / 3.0})) ==
        doctest::Approx(5.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("purity equals the eigenvalue square sum") {
  GaussianSource rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = oracles::random_density(2, rng);
    const auto es = hermitian_eigensystem(rho.matrix());
    double sum = 0.0;
    for (double v : es.values) sum += v * v;
    CHECK(purity(rho) == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("von_neumann_entropy: fixed values in bits") {
  CHECK(von_neumann_entropy(projector(make_ghz(2))) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diag_density({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diag_density({2.0 / 3.0, 1.0 / 3.0})) ==
        doctest::Approx(std::log2(3.0) - 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("density matrix validation") {
  ComplexMatrix m(2);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(0, 1) = Complex(0.0, 0.3);
  m(1, 0) = Complex(0.0, 0.3);  // not conjugate-symmetric
  CHECK_THROWS_AS(DensityMatrix::from_matrix(m), std::invalid_argument);

  ComplexMatrix t(2);
  t(0, 0) = 0.9;
  t(1, 1) = 0.2;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(t), std::invalid_argument);

  ComplexMatrix neg(2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(neg), std::invalid_argument);
}

TEST_CASE("state vector validation") {
  CHECK_THROWS_AS(StateVector(2, {1.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(1, {0.9, 0.1}), std::invalid_argument);
}
