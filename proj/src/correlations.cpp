#include "fock/correlations.hpp"

#include <cmath>

#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"
#include "fock/photon_removal.hpp"

namespace fock {

CorrelationIndex::CorrelationIndex(OccupationVector k, OccupationVector l)
    : creators(std::move(k)), annihilators(std::move(l)) {
    if (creators.modes() != annihilators.modes())
        raise(ErrorCode::ModeMismatch, "creator and annihilator patterns differ in mode count");
}

std::string CorrelationIndex::str() const {
    return "k=" + creators.str() + " l=" + annihilators.str();
}

namespace {

void check_modes(const BeamState& rho, const CorrelationIndex& idx) {
    if (idx.modes() != rho.modes())
        raise(ErrorCode::ModeMismatch, "index has " + std::to_string(idx.modes()) +
                                           " modes, state has " + std::to_string(rho.modes()));
}

/// <n| a^dag^k a^l |m> for m - l = n - k >= 0:
/// sqrt(prod_i ff(m_i, l_i) * ff(n_i, k_i)), exact inside the root.
bool ladder_factor(const OccupationVector& m, const OccupationVector& n,
                   const CorrelationIndex& idx, double* factor) {
    BigInt product = 1;
    for (int i = 0; i < m.modes(); ++i) {
        if (m[i] - idx.annihilators[i] != n[i] - idx.creators[i]) return false;
        if (m[i] < idx.annihilators[i]) return false;
        product *= falling_factorial(m[i], idx.annihilators[i]);
        product *= falling_factorial(n[i], idx.creators[i]);
    }
    *factor = sqrt_of(product);
    return true;
}

}  // namespace

Complex expectation(const BeamState& rho, const CorrelationIndex& idx) {
    check_modes(rho, idx);
    Complex total(0.0, 0.0);
    for (const auto& [label, amp] : rho.terms()) {
        double factor = 0.0;
        if (ladder_factor(label.ket, label.bra, idx, &factor)) total += amp * factor;
    }
    return total;
}

ScalingPair scaling_check_fixed_N(const BeamState& rho_N, int N, const CorrelationIndex& idx) {
    check_modes(rho_N, idx);
    if (!idx.balanced())
        raise(ErrorCode::UnbalancedIndex,
              "fixed-N scaling law needs |k| = |l|; got " + idx.str());
    ScalingPair out;
    out.lhs = expectation(remove_one_fixed_N(rho_N, N), idx);
    double ratio = static_cast<double>(N - idx.annihilation_order()) / N;
    out.rhs = ratio * expectation(rho_N, idx);
    return out;
}

GeneralScaling scaling_general(const BeamState& rho, const CorrelationIndex& idx) {
    check_modes(rho, idx);
    GeneralScaling out;
    out.lhs = expectation(remove_one_general(rho).state, idx);
    int order_l = idx.annihilation_order();
    int order_k = idx.creation_order();
    for (auto& form : out.rhs_forms) form = Complex(0.0, 0.0);
    for (const auto& [label, amp] : rho.terms()) {
        double factor = 0.0;
        if (!ladder_factor(label.ket, label.bra, idx, &factor)) continue;
        int tm = label.ket.total();
        int tn = label.bra.total();
        if (tm == 0 || tn == 0) continue;
        Complex contribution = amp * factor;
        double denom = std::sqrt(static_cast<double>(tm) * tn);
        out.rhs_forms[0] += contribution * (static_cast<double>(tm - order_l) / denom);
        out.rhs_forms[1] += contribution * (static_cast<double>(tn - order_k) / denom);
        out.rhs_forms[2] += contribution *
                            (std::sqrt(static_cast<double>(tm - order_l) * (tn - order_k)) / denom);
    }
    return out;
}

double g2(const BeamState& rho, int mode_i, int mode_j) {
    if (mode_i < 0 || mode_i >= rho.modes() || mode_j < 0 || mode_j >= rho.modes())
        raise(ErrorCode::ModeOutOfRange, "g2 mode index outside the state's mode range");
    OccupationVector pair = OccupationVector::zeros(rho.modes())
                                .shifted(mode_i, 1)
                                .shifted(mode_j, 1);
    double numerator = expectation(rho, CorrelationIndex(pair, pair)).real();
    OccupationVector ei = OccupationVector::unit(rho.modes(), mode_i);
    OccupationVector ej = OccupationVector::unit(rho.modes(), mode_j);
    double ni = expectation(rho, CorrelationIndex(ei, ei)).real();
    double nj = expectation(rho, CorrelationIndex(ej, ej)).real();
    if (std::abs(ni) < 1e-14 || std::abs(nj) < 1e-14)
        raise(ErrorCode::ZeroIntensity, "g2 denominator vanishes");
    return numerator / (ni * nj);
}

}  // namespace fock
