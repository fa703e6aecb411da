#include "fock/random_states.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fock/errors.hpp"

namespace fock {

namespace {

std::vector<OccupationVector> basis_up_to(int d, int N_max) {
    std::vector<OccupationVector> basis;
    for (int n = 0; n <= N_max; ++n)
        for (auto& occ : enumerate_occupations(d, n)) basis.push_back(std::move(occ));
    return basis;
}

std::vector<std::pair<OccupationVector, Complex>> random_ket(
    const std::vector<OccupationVector>& basis, Rng& rng) {
    std::vector<std::pair<OccupationVector, Complex>> amplitudes;
    amplitudes.reserve(basis.size());
    for (const auto& occ : basis) amplitudes.emplace_back(occ, rng.complex_normal());
    return amplitudes;
}

BeamState gram_mixture(int d, const std::vector<std::vector<OccupationVector>>& supports,
                       Rng& rng) {
    StateBuilder builder(d);
    double total_weight = 0.0;
    std::vector<double> weights(supports.size());
    for (auto& w : weights) {
        w = 0.2 + rng.uniform();
        total_weight += w;
    }
    for (std::size_t r = 0; r < supports.size(); ++r)
        builder.add_scaled(BeamState::pure(d, random_ket(supports[r], rng)),
                           Complex(weights[r] / total_weight, 0.0));
    return builder.build();
}

}  // namespace

BeamState random_pure_fixed_N(int d, int N, Rng& rng) {
    return BeamState::pure(d, random_ket(enumerate_occupations(d, N), rng));
}

BeamState random_mixed_fixed_N(int d, int N, int rank, Rng& rng) {
    std::vector<std::vector<OccupationVector>> supports(rank, enumerate_occupations(d, N));
    return gram_mixture(d, supports, rng);
}

BeamState random_pure(int d, int N_max, Rng& rng) {
    return BeamState::pure(d, random_ket(basis_up_to(d, N_max), rng));
}

BeamState random_mixed_block_diagonal(int d, int N_max, int rank, Rng& rng) {
    std::vector<std::vector<OccupationVector>> supports;
    supports.reserve(rank);
    for (int r = 0; r < rank; ++r)
        supports.push_back(enumerate_occupations(d, rng.uniform_int(0, N_max)));
    return gram_mixture(d, supports, rng);
}

BeamState random_cross_coherent(int d, int N_max, int rank, Rng& rng) {
    std::vector<std::vector<OccupationVector>> supports(rank, basis_up_to(d, N_max));
    return gram_mixture(d, supports, rng);
}

BeamState random_state(int d, int N_max, StateKind kind, unsigned long long seed) {
    if (d < 1 || d > 4) raise(ErrorCode::ModeOutOfRange, "random states support 1 to 4 modes");
    if (N_max < 0 || N_max > 6)
        raise(ErrorCode::TooManyPhotons, "random states are capped at 6 photons");
    Rng rng(seed);
    switch (kind) {
        case StateKind::Pure:
            return random_pure(d, N_max, rng);
        case StateKind::Mixed:
            return random_mixed_block_diagonal(d, N_max, 3, rng);
        case StateKind::CrossCoherent:
            return random_cross_coherent(d, N_max, 2, rng);
    }
    raise(ErrorCode::ParseError, "unknown state kind");
}

ModeUnitary random_unitary(int d, Rng& rng) {
    Eigen::MatrixXcd gaussian(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex z = rng.complex_normal();
            gaussian(i, j) = std::complex<double>(z.real(), z.imag());
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian);
    Eigen::MatrixXcd q = qr.householderQ();
    std::vector<std::vector<Complex>> entries(d, std::vector<Complex>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) entries[i][j] = Complex(q(i, j).real(), q(i, j).imag());
    return ModeUnitary(std::move(entries));
}

}  // namespace fock
