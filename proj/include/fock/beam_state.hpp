#ifndef FOCK_BEAM_STATE_HPP
#define FOCK_BEAM_STATE_HPP

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "fock/occupation.hpp"

namespace fock {

using Complex = std::complex<double>;

/// Amplitudes below this magnitude are dropped after every operator
/// application. All formulas here are finite combinations of rationals and
/// square roots of integers, so anything smaller is numerical dust.
inline constexpr double kPruneEpsilon = 1e-14;

/// Default tolerance for Hermiticity validation; overridable per call and,
/// in the CLI, via --tolerance or PHOTON_SUBSET_TOL.
inline constexpr double kDefaultHermitianTol = 1e-12;

/// One matrix-element label: the pair (ket, bra) addressing rho_{ket,bra}.
/// Canonical ordering is lexicographic on bra first, then ket, which fixes
/// serialization byte-for-byte.
struct KetBra {
    OccupationVector ket;
    OccupationVector bra;

    friend bool operator==(const KetBra& a, const KetBra& b) = default;
    friend bool operator<(const KetBra& a, const KetBra& b) {
        if (auto c = a.bra <=> b.bra; c != 0) return c < 0;
        return a.ket < b.ket;
    }
};

using TermMap = std::map<KetBra, Complex>;

/// Sparse operator on multimode Fock space: a map from ket-bra labels to
/// complex amplitudes. Hermitian-intended but not enforced, so intermediate
/// objects like a bare |m><n| are representable. Instances are immutable
/// after construction; every operation returns a new state.
class BeamState {
public:
    BeamState() = default;
    explicit BeamState(int modes);
    /// Takes ownership of a term map; prunes dust, caches trace and the
    /// maximum photon total.
    BeamState(int modes, TermMap terms);

    static BeamState vacuum(int modes);
    /// Single term amp * |ket><bra|.
    static BeamState ket_bra(const OccupationVector& ket, const OccupationVector& bra,
                             Complex amplitude = Complex(1.0, 0.0));
    /// Normalized projector |psi><psi| from ket amplitudes.
    static BeamState pure(int modes,
                          const std::vector<std::pair<OccupationVector, Complex>>& amplitudes);

    int modes() const { return modes_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Sum of diagonal amplitudes' real parts (cached at construction).
    double trace() const { return trace_; }
    /// Largest photon total over stored kets and bras (0 for the null operator).
    int max_photons() const { return max_photons_; }

    /// max |a_{mn} - conj(a_{nm})| over all stored labels.
    double hermitian_error() const;
    bool is_hermitian(double tol = kDefaultHermitianTol) const {
        return hermitian_error() <= tol;
    }
    bool is_normalized(double tol = 1e-12) const;

    /// Stored amplitude for (ket, bra); zero when absent.
    Complex amplitude(const OccupationVector& ket, const OccupationVector& bra) const;

    BeamState normalized() const;  // divides by trace; ZeroTrace on a null operator
    BeamState scaled(Complex factor) const;
    BeamState plus(const BeamState& other) const;

private:
    int modes_ = 0;
    TermMap terms_;
    double trace_ = 0.0;
    int max_photons_ = 0;
};

/// Accumulator for assembling a BeamState term by term. Duplicate labels sum.
class StateBuilder {
public:
    explicit StateBuilder(int modes) : modes_(modes) {}

    void add(const OccupationVector& ket, const OccupationVector& bra, Complex amplitude);
    void add_scaled(const BeamState& state, Complex factor);
    BeamState build();

private:
    int modes_;
    TermMap terms_;
};

enum class Side { Ket, Bra, Both };

/// Ladder action of the annihilation operator for one mode: a rho (ket),
/// rho a-dagger (bra), or the a rho a-dagger sandwich (both), with exact
/// sqrt(n) factors. Terms whose acted side is already empty are dropped.
BeamState apply_annihilation(const BeamState& state, int mode, Side side);

double state_trace(const BeamState& state);
double hermitian_error(const BeamState& state);
BeamState normalize(const BeamState& state);

/// One photon-number sector: probability weight and the unit-trace state.
struct Sector {
    double probability = 0.0;
    BeamState state;
};

/// Split of a state into fixed-photon-number sectors plus the cross-sector
/// remainder (all |ket| != |bra| terms).
struct SectorDecomposition {
    int modes = 0;
    std::map<int, Sector> sectors;
    BeamState cross_terms;

    /// Sum of probability-weighted sectors plus cross terms.
    BeamState reassemble() const;
};

/// Project onto each photon-number subspace and normalize per sector.
/// Requires Hermiticity within `hermitian_tol`. Zero-weight sectors are
/// omitted.
SectorDecomposition sector_decompose(const BeamState& state,
                                     double hermitian_tol = kDefaultHermitianTol);

/// Largest entrywise difference over the union of the two term maps.
double max_abs_difference(const BeamState& a, const BeamState& b);

}  // namespace fock

#endif
