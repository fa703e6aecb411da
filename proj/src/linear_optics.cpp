#include "fock/linear_optics.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"

namespace fock {

ModeUnitary::ModeUnitary(std::vector<std::vector<Complex>> entries, double unitarity_tol)
    : entries_(std::move(entries)) {
    std::size_t d = entries_.size();
    if (d == 0) raise(ErrorCode::EmptyState, "a network needs at least one mode");
    for (const auto& row : entries_)
        if (row.size() != d) raise(ErrorCode::NonUnitary, "network matrix must be square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex dot(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k) dot += entries_[i][k] * std::conj(entries_[j][k]);
            Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(dot - expected) > unitarity_tol)
                raise(ErrorCode::NonUnitary, "U U^dagger deviates from identity at (" +
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                 ")");
        }
}

ModeUnitary ModeUnitary::identity(int d) {
    std::vector<std::vector<Complex>> entries(d, std::vector<Complex>(d, Complex(0.0, 0.0)));
    for (int i = 0; i < d; ++i) entries[i][i] = Complex(1.0, 0.0);
    return ModeUnitary(std::move(entries));
}

ModeUnitary ModeUnitary::beam_splitter_50_50() {
    double r = 1.0 / std::sqrt(2.0);
    return ModeUnitary({{Complex(r, 0.0), Complex(r, 0.0)}, {Complex(r, 0.0), Complex(-r, 0.0)}});
}

ModeUnitary ModeUnitary::mode_swap(int d, int i, int j) {
    auto entries = identity(d).entries();
    std::swap(entries[i], entries[j]);
    return ModeUnitary(std::move(entries));
}

ModeUnitary ModeUnitary::dagger() const {
    int d = dim();
    std::vector<std::vector<Complex>> entries(d, std::vector<Complex>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) entries[i][j] = std::conj(entries_[j][i]);
    return ModeUnitary(std::move(entries));
}

ModeUnitary ModeUnitary::times(const ModeUnitary& other) const {
    if (dim() != other.dim())
        raise(ErrorCode::ModeMismatch, "cannot compose networks of different sizes");
    int d = dim();
    std::vector<std::vector<Complex>> entries(d, std::vector<Complex>(d, Complex(0.0, 0.0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) entries[i][j] += entries_[i][k] * other.entries_[k][j];
    return ModeUnitary(std::move(entries));
}

Complex permanent(const std::vector<std::vector<Complex>>& matrix) {
    std::size_t n = matrix.size();
    if (n > static_cast<std::size_t>(kMaxPermanentSide))
        raise(ErrorCode::TooLarge, "permanent side " + std::to_string(n) + " exceeds " +
                                       std::to_string(kMaxPermanentSide));
    for (const auto& row : matrix)
        if (row.size() != n) raise(ErrorCode::TooLarge, "permanent needs a square matrix");
    if (n == 0) return Complex(1.0, 0.0);

    std::vector<Complex> rowsum(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    unsigned long long old_gray = 0;
    for (unsigned long long k = 1; k < (1ull << n); ++k) {
        unsigned long long gray = k ^ (k >> 1);
        unsigned long long diff = gray ^ old_gray;
        int column = std::countr_zero(diff);
        if (gray & diff)
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += matrix[i][column];
        else
            for (std::size_t i = 0; i < n; ++i) rowsum[i] -= matrix[i][column];
        Complex prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) prod *= rowsum[i];
        bool negate = ((n - std::popcount(gray)) % 2) != 0;
        total += negate ? -prod : prod;
        old_gray = gray;
    }
    return total;
}

Complex transition_amplitude(const ModeUnitary& U, const OccupationVector& out,
                             const OccupationVector& in) {
    if (out.total() != in.total()) return Complex(0.0, 0.0);
    int photons = in.total();
    std::vector<int> row_modes, col_modes;
    row_modes.reserve(photons);
    col_modes.reserve(photons);
    for (int i = 0; i < in.modes(); ++i)
        for (int c = 0; c < in[i]; ++c) row_modes.push_back(i);
    for (int j = 0; j < out.modes(); ++j)
        for (int c = 0; c < out[j]; ++c) col_modes.push_back(j);
    std::vector<std::vector<Complex>> submatrix(photons, std::vector<Complex>(photons));
    for (int r = 0; r < photons; ++r)
        for (int c = 0; c < photons; ++c) submatrix[r][c] = U.at(row_modes[r], col_modes[c]);
    return permanent(submatrix) / std::sqrt(to_double(occupation_factorial(in)) *
                                            to_double(occupation_factorial(out)));
}

BeamState apply_unitary(const BeamState& rho, const ModeUnitary& U) {
    if (U.dim() != rho.modes())
        raise(ErrorCode::ModeMismatch, "network size differs from the state's mode count");
    if (rho.max_photons() > kMaxNetworkPhotons)
        raise(ErrorCode::TooManyPhotons,
              "network transforms are capped at " + std::to_string(kMaxNetworkPhotons) +
                  " photons per basis vector");

    // One induced-unitary block per photon-number sector, built on demand.
    struct SectorBlock {
        std::vector<OccupationVector> basis;
        std::vector<std::vector<Complex>> amplitudes;  // [target][source]
    };
    std::map<int, SectorBlock> blocks;
    auto block_for = [&](int photons) -> const SectorBlock& {
        auto it = blocks.find(photons);
        if (it != blocks.end()) return it->second;
        SectorBlock block;
        block.basis = enumerate_occupations(rho.modes(), photons);
        std::size_t size = block.basis.size();
        block.amplitudes.assign(size, std::vector<Complex>(size));
        for (std::size_t t = 0; t < size; ++t)
            for (std::size_t s = 0; s < size; ++s)
                block.amplitudes[t][s] = transition_amplitude(U, block.basis[t], block.basis[s]);
        return blocks.emplace(photons, std::move(block)).first->second;
    };

    StateBuilder out(rho.modes());
    for (const auto& [label, amp] : rho.terms()) {
        const SectorBlock& ket_block = block_for(label.ket.total());
        const SectorBlock& bra_block = block_for(label.bra.total());
        std::size_t ket_index = 0, bra_index = 0;
        while (!(ket_block.basis[ket_index] == label.ket)) ++ket_index;
        while (!(bra_block.basis[bra_index] == label.bra)) ++bra_index;
        for (std::size_t t = 0; t < ket_block.basis.size(); ++t) {
            Complex left = ket_block.amplitudes[t][ket_index];
            if (std::abs(left) < kPruneEpsilon) continue;
            for (std::size_t u = 0; u < bra_block.basis.size(); ++u) {
                Complex right = bra_block.amplitudes[u][bra_index];
                if (std::abs(right) < kPruneEpsilon) continue;
                out.add(ket_block.basis[t], bra_block.basis[u], amp * left * std::conj(right));
            }
        }
    }
    return out.build();
}

}  // namespace fock
