#include "fock/subset_states.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"
#include "fock/photon_removal.hpp"

namespace fock {

namespace {

double binomial_d(long long n, long long k) { return to_double(binomial(n, k)); }

/// N(q) through the diagonal-correlation route: sum over |m| = q of
/// <O_mm> / prod(m_i!). Only diagonal-sector terms of rho can contribute.
double normalization_via_correlations(const BeamState& rho, int q) {
    double total = 0.0;
    for (const auto& m : enumerate_occupations(rho.modes(), q)) {
        Complex omm = expectation(rho, CorrelationIndex(m, m));
        total += omm.real() / to_double(occupation_factorial(m));
    }
    return total;
}

}  // namespace

SubsetWeights subset_weights(const SectorDecomposition& decomp, int q, double dual_route_tol) {
    if (q < 0) raise(ErrorCode::BadSubsetSize, "subset size must be non-negative");
    SubsetWeights out;
    out.q = q;
    double norm = 0.0;
    for (const auto& [N, sector] : decomp.sectors) {
        if (N < q) continue;
        norm += sector.probability * binomial_d(N, q);
    }
    if (norm <= 0.0)
        raise(ErrorCode::DegenerateNormalization,
              "no support at or above " + std::to_string(q) + " photons");
    out.normalization = norm;
    for (const auto& [N, sector] : decomp.sectors) {
        if (N < q) continue;
        out.weights[N] = sector.probability * binomial_d(N, q) / norm;
    }

    double echo = normalization_via_correlations(decomp.reassemble(), q);
    if (std::abs(echo - norm) > dual_route_tol * std::max(1.0, std::abs(norm)))
        raise(ErrorCode::InternalConsistency,
              "normalization routes disagree: " + std::to_string(norm) + " vs " +
                  std::to_string(echo));
    return out;
}

BeamState random_subset_state(const BeamState& rho, int q, double hermitian_tol,
                              double dual_route_tol) {
    SectorDecomposition decomp = sector_decompose(rho, hermitian_tol);
    SubsetWeights weights = subset_weights(decomp, q, dual_route_tol);
    StateBuilder builder(rho.modes());
    for (const auto& [N, w] : weights.weights)
        builder.add_scaled(subset_of_fixed_N(decomp.sectors.at(N).state, N, q),
                           Complex(w, 0.0));
    return builder.build();
}

BeamState random_subset_state_direct(const BeamState& rho, int q, double hermitian_tol,
                                     double dual_route_tol) {
    SectorDecomposition decomp = sector_decompose(rho, hermitian_tol);
    SubsetWeights weights = subset_weights(decomp, q, dual_route_tol);
    double norm = weights.normalization;

    // Coefficient of |m><n| is <O_nm> / (N(q) sqrt(m! n!)). Scatter from each
    // diagonal-sector term (m', n'): targets m <= m' with |m| = q and
    // n = n' - (m' - m), ladder factor sqrt(prod ff(m'_i,m_i) ff(n'_i,n_i)).
    StateBuilder builder(rho.modes());
    auto targets_cache = enumerate_occupations(rho.modes(), q);
    for (const auto& [label, amp] : rho.terms()) {
        if (label.ket.total() != label.bra.total()) continue;
        if (label.ket.total() < q) continue;
        for (const auto& m : targets_cache) {
            if (!label.ket.dominates(m)) continue;
            bool ok = true;
            std::vector<int> n_entries(rho.modes());
            for (int i = 0; i < rho.modes(); ++i) {
                n_entries[i] = label.bra[i] - (label.ket[i] - m[i]);
                if (n_entries[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            OccupationVector n(n_entries);
            BigInt inside = 1;
            for (int i = 0; i < rho.modes(); ++i) {
                inside *= falling_factorial(label.ket[i], m[i]);
                inside *= falling_factorial(label.bra[i], n[i]);
            }
            double denom = norm * std::sqrt(to_double(occupation_factorial(m)) *
                                            to_double(occupation_factorial(n)));
            builder.add(m, n, amp * sqrt_of(inside) / denom);
        }
    }
    return builder.build();
}

ReconstructionPair reconstruct_expectation(const BeamState& rho, const CorrelationIndex& idx) {
    if (!idx.balanced())
        raise(ErrorCode::UnbalancedIndex,
              "reconstruction needs |k| = |l|; got " + idx.str());
    int q = idx.annihilation_order();
    SectorDecomposition decomp = sector_decompose(rho);
    SubsetWeights weights = subset_weights(decomp, q);
    ReconstructionPair out;
    out.direct = expectation(rho, idx);
    out.via_subset =
        weights.normalization * expectation(random_subset_state_direct(rho, q), idx);
    return out;
}

UniquenessPair uniqueness_counterexample(const BeamState& rho, const CorrelationIndex& idx,
                                         int q) {
    if (!idx.balanced())
        raise(ErrorCode::UnbalancedIndex,
              "uniqueness check needs |k| = |l|; got " + idx.str());
    int order = idx.annihilation_order();
    if (q < order)
        raise(ErrorCode::BadSubsetSize,
              "subset size " + std::to_string(q) + " below the correlation order " +
                  std::to_string(order));
    SectorDecomposition decomp = sector_decompose(rho);
    UniquenessPair out;
    out.actual = expectation(rho, idx);
    out.claimed = Complex(0.0, 0.0);
    // N(q) P(q from N) = p_N C(N,q), so the pipeline value needs no overall
    // normalization and stays defined even when no sector reaches q photons.
    for (const auto& [N, sector] : decomp.sectors) {
        if (N < q) continue;
        out.claimed += sector.probability * binomial_d(N, q) *
                       expectation(subset_of_fixed_N(sector.state, N, q), idx);
    }
    return out;
}

EquivalencePair mixed_sector_equivalence(const BeamState& rho, const CorrelationIndex& idx) {
    EquivalencePair out;
    out.lhs = expectation(rho, idx);
    out.rhs = Complex(0.0, 0.0);
    int order_l = idx.annihilation_order();
    int order_k = idx.creation_order();
    for (const auto& [label, amp] : rho.terms()) {
        int tm = label.ket.total();
        int tn = label.bra.total();
        if (tm - order_l != tn - order_k) continue;
        if (tm < order_l) continue;
        double weight = std::sqrt(binomial_d(tm, order_l) * binomial_d(tn, order_k));
        if (weight == 0.0) continue;
        BeamState reduced =
            remove_k(BeamState::ket_bra(label.ket, label.bra, amp), tm - order_l).state;
        out.rhs += weight * expectation(reduced, idx);
    }
    return out;
}

double min_eigenvalue_on_sector(const BeamState& state, int q) {
    auto basis = enumerate_occupations(state.modes(), q);
    Eigen::MatrixXcd block(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Complex a = state.amplitude(basis[i], basis[j]);
            block(i, j) = std::complex<double>(a.real(), a.imag());
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
    return solver.eigenvalues().minCoeff();
}

}  // namespace fock
