#ifndef FOCK_FIRST_QUANTIZED_HPP
#define FOCK_FIRST_QUANTIZED_HPP

#include <vector>

#include "fock/beam_state.hpp"

namespace fock {

/// Brute-force oracle representation: a fixed-N operator as a dense
/// d^N x d^N matrix over first-quantized slot sequences, each slot a d-level
/// system. Deliberately dumb; no sparsity anywhere.
struct FirstQuantizedState {
    int d = 0;
    int N = 0;
    long long dim = 1;  // d^N
    std::vector<Complex> matrix;  // row-major, [ket_sequence * dim + bra_sequence]

    Complex at(long long ket_seq, long long bra_seq) const {
        return matrix[ket_seq * dim + bra_seq];
    }
    Complex trace() const;
};

inline constexpr long long kDimensionCap = 4096;

/// Embed a fixed-N BeamState: each Fock ket becomes the multinomial-normalized
/// symmetric sum over slot sequences.
FirstQuantizedState to_first_quantized(const BeamState& rho_N, int N);

/// Contract the given slot's ket index against its bra index, yielding the
/// (N-1)-photon operator. The textbook partial trace over one particle.
FirstQuantizedState trace_out_slot(const FirstQuantizedState& op, int slot = 0);

/// Project back onto the symmetric Fock basis. The residual outside the
/// symmetric subspace must stay below `residual_tol`.
BeamState from_first_quantized(const FirstQuantizedState& op, double residual_tol = 1e-10);

/// Max deviation of the matrix under adjacent slot transpositions, applied to
/// ket and bra sequence indices independently. Zero for operators supported
/// on the symmetric subspace.
double symmetry_error(const FirstQuantizedState& op);

}  // namespace fock

#endif
