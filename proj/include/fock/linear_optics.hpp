#ifndef FOCK_LINEAR_OPTICS_HPP
#define FOCK_LINEAR_OPTICS_HPP

#include <vector>

#include "fock/beam_state.hpp"

namespace fock {

/// Passive d-mode network. Convention: the induced Fock-space map implements
/// a_i^dagger -> sum_j U_ij a_j^dagger on creation operators, which fixes all
/// interference phases (HOM signs included).
class ModeUnitary {
public:
    /// Validates U U^dagger = I within `unitarity_tol`.
    explicit ModeUnitary(std::vector<std::vector<Complex>> entries,
                         double unitarity_tol = 1e-12);

    static ModeUnitary identity(int d);
    static ModeUnitary beam_splitter_50_50();  // two-mode, real Hadamard-type
    static ModeUnitary mode_swap(int d, int i, int j);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::vector<Complex>>& entries() const { return entries_; }
    Complex at(int i, int j) const { return entries_[i][j]; }
    ModeUnitary dagger() const;
    ModeUnitary times(const ModeUnitary& other) const;

private:
    std::vector<std::vector<Complex>> entries_;
};

inline constexpr int kMaxPermanentSide = 12;
inline constexpr int kMaxNetworkPhotons = 8;

/// Ryser's formula with Gray-code subset updates, O(2^n n). Side <= 12;
/// the 0x0 permanent is 1.
Complex permanent(const std::vector<std::vector<Complex>>& matrix);

/// Fock transition amplitude <out| U-hat |in| for |in|, |out| in the same
/// photon-number sector: perm(U[out rows, in columns]) / sqrt(out! in!).
Complex transition_amplitude(const ModeUnitary& U, const OccupationVector& out,
                             const OccupationVector& in);

/// Conjugation of the state by the induced network unitary. Photon number of
/// every basis vector is preserved; trace is preserved up to roundoff.
BeamState apply_unitary(const BeamState& rho, const ModeUnitary& U);

}  // namespace fock

#endif
