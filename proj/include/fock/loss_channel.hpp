#ifndef FOCK_LOSS_CHANNEL_HPP
#define FOCK_LOSS_CHANNEL_HPP

#include <utility>

#include "fock/beam_state.hpp"
#include "fock/linear_optics.hpp"

namespace fock {

/// Beam-splitter loss with uniform transmission eta on every mode, as the
/// per-mode Kraus family K_n = (1/sqrt(n!)) ((1-eta)/eta)^(n/2) a^n
/// sqrt(eta)^(n-hat), applied mode by mode. Trace-preserving. The per-term
/// factors are reorganized so only non-negative powers of eta appear, which
/// makes eta = 0 exact total loss rather than a 0/0.
BeamState loss_kraus(const BeamState& rho, double eta);

/// Fixed-N form: sum_k C(N,k) (1-eta)^k eta^(N-k) x (state with k photons
/// removed). Must match loss_kraus.
BeamState loss_fixed_N_decomposition(const BeamState& rho_N, int N, double eta);

/// General form: sum_k (1-eta)^k [D^k(rho)/k!] with every output term
/// |m><n| dressed by eta^((|m|+|n|)/2), where D(s) = sum_i a_i s a_i^dagger.
/// Exact for finite support (the sum stops at the photon cap). Must match
/// loss_kraus. Refuses eta < 1e-6; use the Kraus path near total loss.
BeamState loss_general_decomposition(const BeamState& rho, double eta);

inline constexpr double kMinDecompositionEta = 1e-6;

/// Returns (loss after network, network after loss) for equality assertions.
std::pair<BeamState, BeamState> loss_commutes_with_network(const BeamState& rho, double eta,
                                                           const ModeUnitary& U);

}  // namespace fock

#endif
