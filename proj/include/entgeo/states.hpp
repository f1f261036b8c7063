#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "entgeo/linalg.hpp"

namespace entgeo {

/// Error raised while parsing state/density input, with a stable code so
/// callers can distinguish failure modes.
class ParseError : public std::runtime_error {
 public:
  enum class Code {
    MalformedJson,
    BadLength,
    NotNormalized,
    NotHermitian,
    NotPositive,
    BadSpec,
  };

  ParseError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

using StateOrDensity = std::variant<StateVector, DensityMatrix>;

/// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
StateVector make_ghz(int n);

/// Equal superposition of the n single-excitation basis states.
StateVector make_w(int n);

/// The four Bell states, indexed 0..3:
///   0: (|00>+|11>)/sqrt2   1: (|00>-|11>)/sqrt2
///   2: (|01>+|10>)/sqrt2   3: (|01>-|10>)/sqrt2
StateVector make_bell(int index);

/// Bell(0) on qubits (1,2) tensor Bell(0) on qubits (3,4).
StateVector make_epr_pair_product();

/// sqrt(1-x)|0101> + sqrt(x)/2 (|0000>+|0011>+|1100>+|1111>), x in [0,1].
StateVector make_mems_purification(double x);

/// p |psi-><psi-| + (1-p) I/4 on two qubits, p in [0,1].
DensityMatrix make_werner(double p);

/// Product state from per-qubit amplitude pairs; each factor is
/// normalized before the tensor product is taken.
StateVector make_product(const std::vector<std::array<Complex, 2>>& factors);

/// Haar-random pure state on 1..12 qubits: i.i.d. standard complex
/// Gaussian amplitudes, normalized. Deterministic per seed; the generator
/// is mt19937_64 with an explicit Box-Muller transform, so samples are
/// reproducible across platforms.
StateVector make_random_pure(int n, std::uint64_t seed);

/// Parse the JSON interchange formats:
///   state:   {"n_qubits": n, "amplitudes": [[re,im],...]}
///   density: {"n_qubits": n, "rows": [[[re,im],...],...]}
/// States are renormalized exactly after validation; densities are
/// symmetrized and trace-normalized after their tolerance checks.
StateOrDensity parse_state(const std::string& text);

/// Resolve a named-state spec string: "ghz:4", "w:3", "bell:2",
/// "epr_pair_product", "mems:0.9", "werner:0.5", "random:5:12345",
/// "product:1,0,0,0;0.6,0,0.8,0", "amps:re,im,re,im,...".
StateOrDensity resolve_spec(const std::string& spec);

/// Interchange JSON for a state or density matrix. Amplitudes are written
/// with 17 significant digits so a round trip through parse_state is
/// value-exact.
std::string to_json(const StateVector& psi);
std::string to_json(const DensityMatrix& rho);

}  // namespace entgeo
