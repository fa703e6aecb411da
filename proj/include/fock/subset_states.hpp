#ifndef FOCK_SUBSET_STATES_HPP
#define FOCK_SUBSET_STATES_HPP

#include <map>

#include "fock/beam_state.hpp"
#include "fock/correlations.hpp"

namespace fock {

/// Origin probabilities for a q-photon subset: P(q from N) for each populated
/// sector N, plus the normalization N(q), the expected number of q-photon
/// events.
struct SubsetWeights {
    int q = 0;
    std::map<int, double> weights;  // N -> P(q from N)
    double normalization = 0.0;     // N(q) = sum_N p_N C(N, q)
};

/// P(q from N) = p_N C(N,q) / N(q). N(q) is also recomputed through the
/// diagonal-correlation route sum_{|m|=q} <O_mm>/prod(m_i!) and the two
/// values must agree within `dual_route_tol`.
SubsetWeights subset_weights(const SectorDecomposition& decomp, int q,
                             double dual_route_tol = 1e-10);

/// The state of q photons picked at random from the beam: convex combination
/// sum_N P(q from N) * subset_of_fixed_N(rho_N, N, q).
BeamState random_subset_state(const BeamState& rho, int q,
                              double hermitian_tol = kDefaultHermitianTol,
                              double dual_route_tol = 1e-10);

/// Same state assembled entrywise from order-q correlations: the coefficient
/// of |m><n| is <O_nm>_rho / (N(q) sqrt(m! n!)). Cross-checked against the
/// convex path by the test suite; this is the public default (no iterated
/// removal roundoff).
BeamState random_subset_state_direct(const BeamState& rho, int q,
                                     double hermitian_tol = kDefaultHermitianTol,
                                     double dual_route_tol = 1e-10);

struct ReconstructionPair {
    Complex direct;
    Complex via_subset;
};

/// Correlation recovery from the subset state:
/// <O_kl>_rho = N(|l|) <O_kl> on the |l|-photon subset state. Balanced
/// indices only.
ReconstructionPair reconstruct_expectation(const BeamState& rho, const CorrelationIndex& idx);

struct UniquenessPair {
    Complex claimed;
    Complex actual;
};

/// The q = |l| uniqueness claim: pushing a balanced correlation through the
/// q-photon subset pipeline with the binomial weights,
/// claimed = sum_N p_N C(N-|l|, q-|l|) <O_kl>_{rho_N}, equals the direct
/// expectation iff q = |l| (fixed-N inputs excepted).
UniquenessPair uniqueness_counterexample(const BeamState& rho, const CorrelationIndex& idx,
                                         int q);

struct EquivalencePair {
    Complex lhs;
    Complex rhs;
};

/// Mixed-sector equivalence for |k| != |l|: the direct expectation equals the
/// sum over terms |m><n| of rho_mn sqrt(C(|m|,|l|) C(|n|,|k|)) times the
/// O_kl expectation on the removal-reduced ket-bra Tr_{|m|-|l|}(|m><n|).
EquivalencePair mixed_sector_equivalence(const BeamState& rho, const CorrelationIndex& idx);

/// Smallest eigenvalue of the state's q-photon block (dense eigensolve over
/// the C(q+d-1, d-1) basis). PSD states give values >= -1e-10 up to roundoff.
double min_eigenvalue_on_sector(const BeamState& state, int q);

}  // namespace fock

#endif
