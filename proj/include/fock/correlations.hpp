#ifndef FOCK_CORRELATIONS_HPP
#define FOCK_CORRELATIONS_HPP

#include <utility>

#include "fock/beam_state.hpp"

namespace fock {

/// Normally ordered monomial O_kl: creators to pattern k, annihilators to
/// pattern l. Balanced when |k| = |l|.
struct CorrelationIndex {
    OccupationVector creators;
    OccupationVector annihilators;

    CorrelationIndex(OccupationVector k, OccupationVector l);
    int modes() const { return creators.modes(); }
    int creation_order() const { return creators.total(); }
    int annihilation_order() const { return annihilators.total(); }
    bool balanced() const { return creation_order() == annihilation_order(); }
    std::string str() const;
};

/// Tr(O_kl rho), termwise: |m><n| contributes iff m - l = n - k >= 0
/// componentwise, with ladder factor sqrt(prod ff(m_i,l_i) prod ff(n_i,k_i))
/// assembled in exact integers before one final square root.
Complex expectation(const BeamState& rho, const CorrelationIndex& idx);

struct ScalingPair {
    Complex lhs;
    Complex rhs;
};

/// Fixed-N removal scaling: lhs is the expectation after one removal, rhs is
/// (N - |l|)/N times the expectation before. Requires a balanced index.
ScalingPair scaling_check_fixed_N(const BeamState& rho_N, int N, const CorrelationIndex& idx);

/// General removal scaling, all three equivalent per-term weightings.
/// lhs = expectation on remove_one_general(rho). rhs_forms[i] weights each
/// contributing |m><n| term's O_kl contribution by, respectively,
///   (|m|-|l|)/sqrt(|m||n|),
///   (|n|-|k|)/sqrt(|m||n|),
///   sqrt((|m|-|l|)(|n|-|k|))/sqrt(|m||n|),
/// with weight 0 whenever |m| = 0 or |n| = 0.
struct GeneralScaling {
    Complex lhs;
    Complex rhs_forms[3];
};

GeneralScaling scaling_general(const BeamState& rho, const CorrelationIndex& idx);

/// <a_i^dag a_j^dag a_j a_i> / (<n_i><n_j>).
double g2(const BeamState& rho, int mode_i, int mode_j);

}  // namespace fock

#endif
