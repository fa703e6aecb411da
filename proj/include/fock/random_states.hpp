#ifndef FOCK_RANDOM_STATES_HPP
#define FOCK_RANDOM_STATES_HPP

#include "fock/beam_state.hpp"
#include "fock/linear_optics.hpp"
#include "fock/rng.hpp"

namespace fock {

enum class StateKind { Pure, Mixed, CrossCoherent };

/// Random normalized ket confined to the N-photon sector, projected up to
/// |psi><psi|. Gaussian amplitudes on every sector basis vector.
BeamState random_pure_fixed_N(int d, int N, Rng& rng);

/// Gram mixture of `rank` sector-confined kets: PSD, trace 1, fixed N.
BeamState random_mixed_fixed_N(int d, int N, int rank, Rng& rng);

/// Random normalized ket over the full basis of totals 0..N_max; generically
/// carries coherence between every pair of photon-number sectors.
BeamState random_pure(int d, int N_max, Rng& rng);

/// Mixture of kets each confined to a randomly chosen sector: PSD, trace 1,
/// block-diagonal in photon number (no cross-sector coherence).
BeamState random_mixed_block_diagonal(int d, int N_max, int rank, Rng& rng);

/// Gram mixture of full-basis kets: PSD, trace 1, cross-sector coherences
/// retained.
BeamState random_cross_coherent(int d, int N_max, int rank, Rng& rng);

/// Seeded entry point behind the CLI: pure | mixed | cross-coherent.
BeamState random_state(int d, int N_max, StateKind kind, unsigned long long seed);

/// Haar-ish random passive network: QR of a complex Gaussian matrix.
ModeUnitary random_unitary(int d, Rng& rng);

}  // namespace fock

#endif
