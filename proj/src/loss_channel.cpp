#include "fock/loss_channel.hpp"

#include <cmath>

#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"
#include "fock/photon_removal.hpp"

namespace fock {

namespace {

void check_eta(double eta) {
    if (eta < 0.0 || eta > 1.0)
        raise(ErrorCode::BadEta, "transmission must lie in [0, 1]; got " + std::to_string(eta));
}

/// One mode of the Kraus sum. The n-photon branch sends |m><m'| to
/// |m - n e_i><m' - n e_i| with factor
/// (1/n!) sqrt(ff(m_i,n) ff(m'_i,n)) (1-eta)^n eta^((m_i + m'_i - 2n)/2);
/// the eta exponent is never negative, so eta = 0 is handled exactly.
BeamState kraus_one_mode(const BeamState& rho, int mode, double eta) {
    StateBuilder out(rho.modes());
    for (const auto& [label, amp] : rho.terms()) {
        int mk = label.ket[mode];
        int mb = label.bra[mode];
        int n_max = std::min(mk, mb);
        for (int n = 0; n <= n_max; ++n) {
            double exponent = 0.5 * (mk + mb - 2 * n);
            double factor = std::pow(1.0 - eta, n) * std::pow(eta, exponent) *
                            sqrt_of(falling_factorial(mk, n) * falling_factorial(mb, n)) /
                            to_double(factorial(n));
            if (factor == 0.0) continue;
            out.add(label.ket.shifted(mode, -n), label.bra.shifted(mode, -n), amp * factor);
        }
    }
    return out.build();
}

/// D(s) = sum_i a_i s a_i^dagger.
BeamState removal_generator(const BeamState& state) {
    StateBuilder out(state.modes());
    for (int mode = 0; mode < state.modes(); ++mode)
        out.add_scaled(apply_annihilation(state, mode, Side::Both), Complex(1.0, 0.0));
    return out.build();
}

}  // namespace

BeamState loss_kraus(const BeamState& rho, double eta) {
    check_eta(eta);
    BeamState current = rho;
    for (int mode = 0; mode < rho.modes(); ++mode) current = kraus_one_mode(current, mode, eta);
    return current;
}

BeamState loss_fixed_N_decomposition(const BeamState& rho_N, int N, double eta) {
    check_eta(eta);
    for (const auto& [label, amp] : rho_N.terms())
        if (label.ket.total() != N || label.bra.total() != N)
            raise(ErrorCode::NotFixedN, "term " + label.ket.str() + " x " + label.bra.str() +
                                            " is not in the " + std::to_string(N) +
                                            "-photon sector");
    StateBuilder out(rho_N.modes());
    BeamState reduced = rho_N;
    for (int k = 0; k <= N; ++k) {
        double weight = to_double(binomial(N, k)) * std::pow(1.0 - eta, k) *
                        std::pow(eta, static_cast<double>(N - k));
        if (weight != 0.0) out.add_scaled(reduced, Complex(weight, 0.0));
        if (k < N) reduced = remove_one_fixed_N(reduced, N - k);
    }
    return out.build();
}

BeamState loss_general_decomposition(const BeamState& rho, double eta) {
    check_eta(eta);
    if (eta < kMinDecompositionEta)
        raise(ErrorCode::BadEta,
              "decomposition path refuses eta below 1e-6; use the Kraus path for total loss");
    StateBuilder out(rho.modes());
    BeamState t_k = rho;  // D^k(rho) / k!
    for (int k = 0; !t_k.empty(); ++k) {
        double loss_power = std::pow(1.0 - eta, k);
        for (const auto& [label, amp] : t_k.terms()) {
            double exponent = 0.5 * (label.ket.total() + label.bra.total());
            out.add(label.ket, label.bra, amp * loss_power * std::pow(eta, exponent));
        }
        t_k = removal_generator(t_k).scaled(Complex(1.0 / (k + 1), 0.0));
    }
    return out.build();
}

std::pair<BeamState, BeamState> loss_commutes_with_network(const BeamState& rho, double eta,
                                                           const ModeUnitary& U) {
    BeamState after_network = loss_kraus(apply_unitary(rho, U), eta);
    BeamState network_after = apply_unitary(loss_kraus(rho, eta), U);
    return {after_network, network_after};
}

}  // namespace fock
