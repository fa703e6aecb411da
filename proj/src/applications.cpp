#include "fock/applications.hpp"

#include <cmath>

#include "fock/combinatorics.hpp"
#include "fock/correlations.hpp"
#include "fock/errors.hpp"
#include "fock/subset_states.hpp"

namespace fock {

double StokesVector::vector_norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }
double StokesVector::squared_length() const { return s0 * s0 + s1 * s1 + s2 * s2 + s3 * s3; }

double purity_direct(const BeamState& rho) {
    double total = 0.0;
    for (const auto& [label, amp] : rho.terms())
        total += (amp * rho.amplitude(label.bra, label.ket)).real();
    return total;
}

double reduced_purity_formula(const BeamState& psi_N, int N, int q) {
    for (const auto& [label, amp] : psi_N.terms())
        if (label.ket.total() != N || label.bra.total() != N)
            raise(ErrorCode::NotFixedN, "term " + label.ket.str() + " x " + label.bra.str() +
                                            " is not in the " + std::to_string(N) +
                                            "-photon sector");
    if (q < 0 || q > N)
        raise(ErrorCode::BadSubsetSize,
              "kept photon count " + std::to_string(q) + " outside [0, " + std::to_string(N) + "]");
    if (std::abs(purity_direct(psi_N) - 1.0) > 1e-10)
        raise(ErrorCode::NotPure, "purity formula needs a rank-1 input state");

    int r = N - q;
    double prefactor = std::pow(to_double(factorial(q)) / to_double(factorial(N)), 2.0);
    auto patterns = enumerate_occupations(psi_N.modes(), r);
    double sum = 0.0;
    for (const auto& k : patterns) {
        double wk = to_double(multinomial(k));
        for (const auto& l : patterns) {
            double wl = to_double(multinomial(l));
            Complex o = expectation(psi_N, CorrelationIndex(k, l));
            sum += wk * wl * std::norm(o);
        }
    }
    return prefactor * sum;
}

StokesVector stokes(const BeamState& rho) {
    if (rho.modes() != 2)
        raise(ErrorCode::WrongModeCount, "Stokes parameters are defined for two-mode states");
    OccupationVector e1 = OccupationVector::unit(2, 0);
    OccupationVector e2 = OccupationVector::unit(2, 1);
    double n1 = expectation(rho, CorrelationIndex(e1, e1)).real();
    double n2 = expectation(rho, CorrelationIndex(e2, e2)).real();
    Complex coherence = expectation(rho, CorrelationIndex(e1, e2));  // <a1^dag a2>
    StokesVector s;
    s.s0 = n1 + n2;
    s.s1 = n1 - n2;
    s.s2 = 2.0 * coherence.real();
    s.s3 = 2.0 * coherence.imag();
    return s;
}

std::array<double, 3> bloch_of_random_photon(const BeamState& rho) {
    if (rho.modes() != 2)
        raise(ErrorCode::WrongModeCount, "Bloch vector is defined for two-mode states");
    BeamState one_photon = random_subset_state_direct(rho, 1);
    OccupationVector e1 = OccupationVector::unit(2, 0);
    OccupationVector e2 = OccupationVector::unit(2, 1);
    double p0 = one_photon.amplitude(e1, e1).real();
    double p1 = one_photon.amplitude(e2, e2).real();
    Complex upper = one_photon.amplitude(e1, e2);
    return {p0 - p1, 2.0 * upper.real(), -2.0 * upper.imag()};
}

std::pair<double, double> projector_expectation_series(const BeamState& rho, int m) {
    if (rho.modes() != 1)
        raise(ErrorCode::WrongModeCount, "projector series is implemented for single-mode states");
    if (m < 0) raise(ErrorCode::BadSubsetSize, "projector level must be non-negative");
    double series = 0.0;
    for (int n = m; n <= rho.max_photons(); ++n) {
        OccupationVector level({n});
        double onn = expectation(rho, CorrelationIndex(level, level)).real();
        double coeff = 1.0 / (to_double(factorial(m)) * to_double(factorial(n - m)));
        series += ((n - m) % 2 == 0 ? coeff : -coeff) * onn;
    }
    OccupationVector target({m});
    double direct = rho.amplitude(target, target).real();
    return {series, direct};
}

}  // namespace fock
