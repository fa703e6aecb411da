#ifndef FOCK_STATE_IO_HPP
#define FOCK_STATE_IO_HPP

#include <string>
#include <vector>

#include "fock/beam_state.hpp"

namespace fock {

/// Parse a state document: {"modes": d, "terms": [{"ket": [...], "bra": [...],
/// "re": x, "im": y}, ...]}. "im" may be omitted for real amplitudes.
/// Validates mode counts and the photon cap; Hermiticity is checked by
/// load_state (callers needing raw operators use parse_state directly).
BeamState parse_state(const std::string& json_text);

/// parse_state plus a Hermiticity check within `hermitian_tol`.
BeamState load_state(const std::string& path, double hermitian_tol = kDefaultHermitianTol);
BeamState parse_checked(const std::string& json_text,
                        double hermitian_tol = kDefaultHermitianTol);

/// Canonical serialization: terms in (bra, ket) lexicographic order, every
/// number printed with 17 significant digits. Identical states produce
/// identical bytes.
std::string state_to_json(const BeamState& state);
void save_state(const BeamState& state, const std::string& path);

/// Complex matrix document {"re": [[...]], "im": [[...]]} ("im" optional).
std::vector<std::vector<Complex>> parse_matrix(const std::string& json_text);
std::vector<std::vector<Complex>> load_matrix(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// 17-significant-digit formatting used across all emitters.
std::string format_double(double value);

}  // namespace fock

#endif
