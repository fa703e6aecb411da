#ifndef FOCK_APPLICATIONS_HPP
#define FOCK_APPLICATIONS_HPP

#include <array>
#include <utility>

#include "fock/beam_state.hpp"

namespace fock {

/// First-order coherence summary of a two-mode beam, in photon units:
/// s0 = <n1 + n2>, s1 = <n1 - n2>, s2 = 2 Re<a1^dag a2>, s3 = 2 Im<a1^dag a2>.
struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double vector_norm() const;          // sqrt(s1^2 + s2^2 + s3^2)
    double squared_length() const;       // s0^2 + s1^2 + s2^2 + s3^2
};

/// Tr(rho^2) straight off the term map.
double purity_direct(const BeamState& rho);

/// Purity of the q-photon reduction of a pure fixed-N state via the
/// correlation-moment sum (q!/N!)^2 sum_{kl} multinom(N-q;k) multinom(N-q;l)
/// |<O_kl>|^2, no reduced state ever formed.
double reduced_purity_formula(const BeamState& psi_N, int N, int q);

StokesVector stokes(const BeamState& rho);

/// Bloch vector of the one-photon subset state; equals (s1,s2,s3)/s0.
std::array<double, 3> bloch_of_random_photon(const BeamState& rho);

/// Photon-number projector as a terminating normally-ordered series:
/// <|m><m|> = sum_{n=m}^{N_max} (-1)^(n-m)/(m!(n-m)!) <O_nn>. Returns the
/// series value and the direct probability <m|rho|m> for comparison.
std::pair<double, double> projector_expectation_series(const BeamState& rho, int m);

}  // namespace fock

#endif
