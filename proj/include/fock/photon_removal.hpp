#ifndef FOCK_PHOTON_REMOVAL_HPP
#define FOCK_PHOTON_REMOVAL_HPP

#include "fock/beam_state.hpp"

namespace fock {

struct RemovalResult {
    BeamState state;
    int removed = 0;
    /// Equals trace(state): the probability weight of input sectors holding
    /// at least `removed` photons.
    double trace_retained = 0.0;
};

/// Mode-agnostic removal of one photon from a fixed-N state:
/// (1/N) sum_i a_i rho a_i^dagger. Trace-preserving.
BeamState remove_one_fixed_N(const BeamState& rho_N, int N);

/// Removal of one photon from an arbitrary state:
/// sum_i a_i (1/sqrt(N-hat)) rho (1/sqrt(N-hat)) a_i^dagger, with 1/sqrt(N-hat)
/// acting as zero on the vacuum (pseudo-inverse convention). Vacuum weight is
/// annihilated, so the output trace is 1 - p0 and is reported, not silently
/// renormalized. In debug builds the equivalent ordering
/// (1/sqrt(N-hat+1)) a_i rho a_i^dagger (1/sqrt(N-hat+1)) is computed too and
/// the two are asserted to agree.
RemovalResult remove_one_general(const BeamState& rho);

/// remove_one_general iterated k times; k = 0 is the identity.
RemovalResult remove_k(const BeamState& rho, int k);

/// q photons surviving out of a fixed-N state: remove_one_fixed_N iterated
/// N - q times. Trace-1 output on the q-photon sector.
BeamState subset_of_fixed_N(const BeamState& rho_N, int N, int q);

namespace detail {

/// The two orderings of the general one-photon removal, exposed separately
/// so tests can diff them directly.
BeamState remove_one_inverse_first(const BeamState& rho);
BeamState remove_one_inverse_last(const BeamState& rho);

}  // namespace detail

}  // namespace fock

#endif
