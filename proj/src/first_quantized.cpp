#include "fock/first_quantized.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"

namespace fock {

namespace {

long long power(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::vector<int> digits_of(long long seq, int d, int N) {
    std::vector<int> slots(N);
    for (int s = N - 1; s >= 0; --s) {
        slots[s] = static_cast<int>(seq % d);
        seq /= d;
    }
    return slots;
}

long long index_of(const std::vector<int>& slots, int d) {
    long long seq = 0;
    for (int slot : slots) seq = seq * d + slot;
    return seq;
}

OccupationVector occupation_of(const std::vector<int>& slots, int d) {
    std::vector<int> counts(d, 0);
    for (int slot : slots) ++counts[slot];
    return OccupationVector(counts);
}

/// Sequence lists per occupation, in linear-index order.
std::map<OccupationVector, std::vector<long long>> sequences_by_occupation(int d, int N) {
    std::map<OccupationVector, std::vector<long long>> groups;
    long long dim = power(d, N);
    for (long long seq = 0; seq < dim; ++seq)
        groups[occupation_of(digits_of(seq, d, N), d)].push_back(seq);
    return groups;
}

}  // namespace

Complex FirstQuantizedState::trace() const {
    Complex t(0.0, 0.0);
    for (long long i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

FirstQuantizedState to_first_quantized(const BeamState& rho_N, int N) {
    int d = rho_N.modes();
    long long dim = power(d, N);
    if (dim > kDimensionCap)
        raise(ErrorCode::DimensionCap, "d^N = " + std::to_string(dim) +
                                           " exceeds the oracle cap of " +
                                           std::to_string(kDimensionCap));
    auto groups = sequences_by_occupation(d, N);

    FirstQuantizedState out;
    out.d = d;
    out.N = N;
    out.dim = dim;
    out.matrix.assign(dim * dim, Complex(0.0, 0.0));
    for (const auto& [label, amp] : rho_N.terms()) {
        if (label.ket.total() != N || label.bra.total() != N)
            raise(ErrorCode::NotFixedN, "term " + label.ket.str() + " x " + label.bra.str() +
                                            " is not in the " + std::to_string(N) +
                                            "-photon sector");
        Complex coeff =
            amp / std::sqrt(to_double(multinomial(label.ket)) * to_double(multinomial(label.bra)));
        const auto& ket_seqs = groups.at(label.ket);
        const auto& bra_seqs = groups.at(label.bra);
        for (long long ks : ket_seqs)
            for (long long bs : bra_seqs) out.matrix[ks * dim + bs] += coeff;
    }
    return out;
}

FirstQuantizedState trace_out_slot(const FirstQuantizedState& op, int slot) {
    if (op.N < 1) raise(ErrorCode::EmptyTensor, "no slot left to trace out");
    if (slot < 0 || slot >= op.N)
        raise(ErrorCode::ModeOutOfRange, "slot " + std::to_string(slot) + " outside [0, " +
                                             std::to_string(op.N) + ")");
    if (symmetry_error(op) > 1e-12)
        raise(ErrorCode::NotSymmetric, "operator is not supported on the symmetric subspace");
    FirstQuantizedState out;
    out.d = op.d;
    out.N = op.N - 1;
    out.dim = power(op.d, out.N);
    out.matrix.assign(out.dim * out.dim, Complex(0.0, 0.0));
    for (long long ki = 0; ki < out.dim; ++ki) {
        std::vector<int> ket_rest = digits_of(ki, op.d, out.N);
        for (long long bi = 0; bi < out.dim; ++bi) {
            std::vector<int> bra_rest = digits_of(bi, op.d, out.N);
            Complex sum(0.0, 0.0);
            for (int c = 0; c < op.d; ++c) {
                std::vector<int> ket_full = ket_rest;
                std::vector<int> bra_full = bra_rest;
                ket_full.insert(ket_full.begin() + slot, c);
                bra_full.insert(bra_full.begin() + slot, c);
                sum += op.at(index_of(ket_full, op.d), index_of(bra_full, op.d));
            }
            out.matrix[ki * out.dim + bi] = sum;
        }
    }
    return out;
}

double symmetry_error(const FirstQuantizedState& op) {
    double worst = 0.0;
    for (int s = 0; s + 1 < op.N; ++s) {
        for (long long ki = 0; ki < op.dim; ++ki) {
            std::vector<int> kd = digits_of(ki, op.d, op.N);
            std::swap(kd[s], kd[s + 1]);
            long long kswap = index_of(kd, op.d);
            for (long long bi = 0; bi < op.dim; ++bi) {
                std::vector<int> bd = digits_of(bi, op.d, op.N);
                std::swap(bd[s], bd[s + 1]);
                long long bswap = index_of(bd, op.d);
                worst = std::max(worst, std::abs(op.at(ki, bi) - op.at(kswap, bi)));
                worst = std::max(worst, std::abs(op.at(ki, bi) - op.at(ki, bswap)));
            }
        }
    }
    return worst;
}

BeamState from_first_quantized(const FirstQuantizedState& op, double residual_tol) {
    auto groups = sequences_by_occupation(op.d, op.N);

    TermMap terms;
    for (const auto& [ket_occ, ket_seqs] : groups) {
        for (const auto& [bra_occ, bra_seqs] : groups) {
            Complex sum(0.0, 0.0);
            for (long long ks : ket_seqs)
                for (long long bs : bra_seqs) sum += op.at(ks, bs);
            Complex coeff = sum / std::sqrt(to_double(multinomial(ket_occ)) *
                                            to_double(multinomial(bra_occ)));
            if (std::abs(coeff) >= kPruneEpsilon) terms[KetBra{ket_occ, bra_occ}] = coeff;
        }
    }
    BeamState reconstructed(op.d, std::move(terms));

    FirstQuantizedState echo = to_first_quantized(reconstructed, op.N);
    double residual = 0.0;
    for (long long i = 0; i < op.dim * op.dim; ++i)
        residual = std::max(residual, std::abs(op.matrix[i] - echo.matrix[i]));
    if (residual > residual_tol)
        raise(ErrorCode::NotSymmetric,
              "tensor has weight outside the symmetric subspace; residual " +
                  std::to_string(residual));
    return reconstructed;
}

}  // namespace fock
