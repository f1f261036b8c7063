#include <doctest.h>

#include <cmath>

#include "entgeo/clifford_maps.hpp"
#include "entgeo/measures.hpp"
#include "entgeo/states.hpp"
#include "oracles.hpp"

using namespace entgeo;

TEST_CASE("normalization: probe and register-size dependence") {
  CHECK(normalization(ProbeKind::MutualInfoFr, 2) == 1.0);
  CHECK(normalization(ProbeKind::MutualInfoFr, 3) == 2.0);
  CHECK(normalization(ProbeKind::MutualInfoFr, 5) == 2.0);
  CHECK(normalization(ProbeKind::QuasiConcurrence, 2) == 1.0);
  CHECK(normalization(ProbeKind::QuasiConcurrence, 7) == 1.0);
  CHECK_THROWS_WITH_AS(normalization(ProbeKind::MutualInfoFr, 4, 3),
                       "qudit normalization out of scope", std::invalid_argument);
}

TEST_CASE("arithmetic_measure: benchmark values") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(arithmetic_measure(pair_probe_matrix(make_ghz(n), ProbeKind::MutualInfoFr)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(arithmetic_measure(pair_probe_matrix(make_ghz(n), ProbeKind::QuasiConcurrence)) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }

  CHECK(arithmetic_measure(pair_probe_matrix(make_epr_pair_product(),
                                             ProbeKind::MutualInfoFr)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  GaussianSource rng(3);
  StateVector prod = oracles::random_qubit(rng);
  for (int q = 1; q < 4; ++q) prod = tensor(prod, oracles::random_qubit(rng));
  CHECK(arithmetic_measure(pair_probe_matrix(prod, ProbeKind::MutualInfoFr)) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(arithmetic_measure(pair_probe_matrix(prod, ProbeKind::QuasiConcurrence)) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("geometric_measure: benchmark values") {
  for (int n = 3; n <= 6; ++n)
    CHECK(geometric_measure(pair_probe_matrix(make_ghz(n), ProbeKind::MutualInfoFr)) ==
          doctest::Approx(1.0).epsilon(1e-12));

  CHECK(geometric_measure(pair_probe_matrix(make_epr_pair_product(),
                                            ProbeKind::MutualInfoFr)) == 0.0);

  const double w_fr = 0.5 * (std::log2(3.0) - 2.0 / 3.0);
  CHECK(geometric_measure(pair_probe_matrix(make_w(3), ProbeKind::MutualInfoFr)) ==
        doctest::Approx(2.0 * w_fr).epsilon(1e-10));
}

TEST_CASE("classify: benchmark labels") {
  const double tol = 1e-9;
  const auto ghz = classify(pair_probe_matrix(make_ghz(4), ProbeKind::MutualInfoFr), tol);
  CHECK(ghz.first == ClassLabel::GloballyEntangled);
  CHECK(ghz.second == Homogeneity::Homogeneous);

  const auto epr =
      classify(pair_probe_matrix(make_epr_pair_product(), ProbeKind::MutualInfoFr), tol);
  CHECK(epr.first == ClassLabel::PartiallyEntangled);
  CHECK(epr.second == Homogeneity::Heterogeneous);

  const std::array<Complex, 2> ket0 = {Complex(1.0), Complex(0.0)};
  const StateVector zeros = make_product({ket0, ket0, ket0, ket0});
  const auto fact = classify(pair_probe_matrix(zeros, ProbeKind::MutualInfoFr), tol);
  CHECK(fact.first == ClassLabel::FullyFactorizable);
  CHECK(fact.second == Homogeneity::Homogeneous);

  CHECK_THROWS_AS(classify(pair_probe_matrix(make_ghz(2), ProbeKind::MutualInfoFr), 0.0),
                  std::invalid_argument);
}

TEST_CASE("measure_report: benchmark assemblies") {
  const MeasureReport ghz = measure_report(make_ghz(3), ProbeKind::MutualInfoFr);
  CHECK(ghz.m == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz.g == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz.classification == ClassLabel::GloballyEntangled);
  CHECK(ghz.homogeneity == Homogeneity::Homogeneous);
  CHECK(ghz.pair_count == 3);
  CHECK_FALSE(ghz.out_of_range);

  const MeasureReport mems =
      measure_report(make_mems_purification(0.95), ProbeKind::MutualInfoFr);
  CHECK(mems.m < 1.0);
  CHECK(mems.g < 1.0);
  CHECK(mems.pairs(1, 2) == doctest::Approx(mems.pairs(3, 4)).epsilon(1e-12));
  CHECK(mems.pairs(1, 2) > 0.5);
  for (auto [a, b] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}})
    CHECK(mems.pairs(a, b) < 0.25);
  CHECK(mems.classification == ClassLabel::GloballyEntangled);
  CHECK(mems.homogeneity == Homogeneity::Heterogeneous);

  const MeasureReport w = measure_report(make_w(3), ProbeKind::QuasiConcurrence);
  CHECK(w.m == doctest::Approx(w.g).epsilon(1e-12));
  CHECK(w.m == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("measures stay within [0, 1] on random pure states") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 10000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const StateVector psi = make_random_pure(n, 100000 + seed);
    for (ProbeKind probe : {ProbeKind::QuasiConcurrence, ProbeKind::MutualInfoFr}) {
      const PairProbeMatrix pm = pair_probe_matrix(psi, probe);
      const double m = arithmetic_measure(pm);
      const double g = geometric_measure(pm);
      REQUIRE(m >= 0.0);
      REQUIRE(g >= 0.0);
      REQUIRE(m <= 1.0 + 1e-9);
      REQUIRE(g <= 1.0 + 1e-9);
    }
    ++checked;
  }
}

TEST_CASE("AM-GM: unnormalized geometric mean never exceeds the arithmetic mean") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = make_random_pure(4, 200000 + seed);
    const PairProbeMatrix pm = pair_probe_matrix(psi, ProbeKind::MutualInfoFr);
    const double norm = normalization(pm.probe, pm.n_qubits);
    const double am = arithmetic_measure(pm) / norm;
    const double gm = geometric_measure(pm) / norm;
    REQUIRE(gm <= am + 1e-12);
  }
}

TEST_CASE("M and G are invariant under qubit relabeling") {
  const StateVector psi = make_random_pure(4, 271828);
  for (ProbeKind probe : {ProbeKind::QuasiConcurrence, ProbeKind::MutualInfoFr}) {
    const PairProbeMatrix pm = pair_probe_matrix(psi, probe);
    const double m = arithmetic_measure(pm), g = geometric_measure(pm);
    for (const auto& perm : symmetric_group(4)) {
      const PairProbeMatrix relabeled = pair_probe_matrix(permute_state(psi, perm), probe);
      REQUIRE(std::abs(arithmetic_measure(relabeled) - m) < 1e-10);
      REQUIRE(std::abs(geometric_measure(relabeled) - g) < 1e-10);
    }
  }
}

TEST_CASE("classification consistency: zero measure vs labels") {
  GaussianSource rng(77);
  StateVector prod = oracles::random_qubit(rng);
  for (int q = 1; q < 3; ++q) prod = tensor(prod, oracles::random_qubit(rng));
  const MeasureReport r = measure_report(prod, ProbeKind::QuasiConcurrence);
  CHECK(r.m <= r.tolerance);
  CHECK(r.classification == ClassLabel::FullyFactorizable);

  const MeasureReport ghz = measure_report(make_ghz(5), ProbeKind::QuasiConcurrence);
  CHECK(ghz.g > ghz.tolerance);
  CHECK(ghz.classification == ClassLabel::GloballyEntangled);
}

TEST_CASE("two-qubit pure states: M = G = Wootters concurrence") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = make_random_pure(2, 300000 + seed);
    const PairProbeMatrix pm = pair_probe_matrix(psi, ProbeKind::QuasiConcurrence);
    const double m = arithmetic_measure(pm);
    const double g = geometric_measure(pm);
    const double c = wootters_concurrence(projector(psi));
    REQUIRE(std::abs(m - g) < 1e-12);
    REQUIRE(std::abs(m - c) < 1e-10);
  }
}

TEST_CASE("measure_report accepts mixed-state input directly") {
  // Werner states are spin-flip invariant, so the lambda spectrum is the
  // state's own: {(1+3p)/4, (1-p)/4 x3}, giving Q_C = p exactly.
  const MeasureReport werner = measure_report(make_werner(0.8), ProbeKind::QuasiConcurrence);
  CHECK(werner.n_qubits == 2);
  CHECK(werner.m == doctest::Approx(0.8).epsilon(1e-10));
}
