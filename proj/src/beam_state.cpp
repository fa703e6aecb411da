#include "fock/beam_state.hpp"

#include <algorithm>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

namespace {

void check_label(int modes, const OccupationVector& occ) {
    if (occ.modes() != modes)
        raise(ErrorCode::ModeMismatch, "term has " + std::to_string(occ.modes()) +
                                           " modes, state has " + std::to_string(modes));
    if (occ.total() > kMaxTotalPhotons)
        raise(ErrorCode::TooManyPhotons,
              "occupation " + occ.str() + " exceeds the photon cap of " +
                  std::to_string(kMaxTotalPhotons));
}

}  // namespace

BeamState::BeamState(int modes) : modes_(modes) {
    if (modes <= 0) raise(ErrorCode::EmptyState, "a state needs at least one mode");
}

BeamState::BeamState(int modes, TermMap terms) : BeamState(modes) {
    for (auto it = terms.begin(); it != terms.end();) {
        check_label(modes_, it->first.ket);
        check_label(modes_, it->first.bra);
        if (std::abs(it->second) < kPruneEpsilon) {
            it = terms.erase(it);
            continue;
        }
        if (it->first.ket == it->first.bra) trace_ += it->second.real();
        max_photons_ = std::max({max_photons_, it->first.ket.total(), it->first.bra.total()});
        ++it;
    }
    terms_ = std::move(terms);
}

BeamState BeamState::vacuum(int modes) {
    OccupationVector vac = OccupationVector::zeros(modes);
    return ket_bra(vac, vac);
}

BeamState BeamState::ket_bra(const OccupationVector& ket, const OccupationVector& bra,
                             Complex amplitude) {
    if (ket.modes() != bra.modes())
        raise(ErrorCode::ModeMismatch, "ket and bra have different mode counts");
    TermMap terms;
    terms[KetBra{ket, bra}] = amplitude;
    return BeamState(ket.modes(), std::move(terms));
}

BeamState BeamState::pure(int modes,
                          const std::vector<std::pair<OccupationVector, Complex>>& amplitudes) {
    double norm2 = 0.0;
    for (const auto& [occ, amp] : amplitudes) {
        check_label(modes, occ);
        norm2 += std::norm(amp);
    }
    if (norm2 <= 0.0) raise(ErrorCode::ZeroTrace, "pure state has zero norm");
    TermMap terms;
    for (const auto& [ket, ka] : amplitudes)
        for (const auto& [bra, ba] : amplitudes)
            terms[KetBra{ket, bra}] += ka * std::conj(ba) / norm2;
    return BeamState(modes, std::move(terms));
}

double BeamState::hermitian_error() const {
    double worst = 0.0;
    for (const auto& [label, amp] : terms_) {
        auto it = terms_.find(KetBra{label.bra, label.ket});
        Complex mirror = (it == terms_.end()) ? Complex(0.0, 0.0) : it->second;
        worst = std::max(worst, std::abs(amp - std::conj(mirror)));
    }
    return worst;
}

bool BeamState::is_normalized(double tol) const { return std::abs(trace_ - 1.0) <= tol; }

Complex BeamState::amplitude(const OccupationVector& ket, const OccupationVector& bra) const {
    auto it = terms_.find(KetBra{ket, bra});
    return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

BeamState BeamState::normalized() const {
    if (std::abs(trace_) < kPruneEpsilon)
        raise(ErrorCode::ZeroTrace, "cannot normalize a state with zero trace");
    return scaled(Complex(1.0 / trace_, 0.0));
}

BeamState BeamState::scaled(Complex factor) const {
    TermMap terms = terms_;
    for (auto& [label, amp] : terms) amp *= factor;
    return BeamState(modes_, std::move(terms));
}

BeamState BeamState::plus(const BeamState& other) const {
    if (modes_ != other.modes_)
        raise(ErrorCode::ModeMismatch, "cannot add states with different mode counts");
    TermMap terms = terms_;
    for (const auto& [label, amp] : other.terms_) terms[label] += amp;
    return BeamState(modes_, std::move(terms));
}

void StateBuilder::add(const OccupationVector& ket, const OccupationVector& bra,
                       Complex amplitude) {
    check_label(modes_, ket);
    check_label(modes_, bra);
    terms_[KetBra{ket, bra}] += amplitude;
}

void StateBuilder::add_scaled(const BeamState& state, Complex factor) {
    if (state.modes() != modes_)
        raise(ErrorCode::ModeMismatch, "cannot accumulate a state with a different mode count");
    for (const auto& [label, amp] : state.terms()) terms_[label] += amp * factor;
}

BeamState StateBuilder::build() { return BeamState(modes_, std::move(terms_)); }

BeamState apply_annihilation(const BeamState& state, int mode, Side side) {
    if (mode < 0 || mode >= state.modes())
        raise(ErrorCode::ModeOutOfRange,
              "mode " + std::to_string(mode) + " outside [0, " +
                  std::to_string(state.modes()) + ")");
    TermMap result;
    for (const auto& [label, amp] : state.terms()) {
        int nk = label.ket[mode];
        int nb = label.bra[mode];
        if ((side == Side::Ket || side == Side::Both) && nk == 0) continue;
        if ((side == Side::Bra || side == Side::Both) && nb == 0) continue;
        double factor = 1.0;
        OccupationVector ket = label.ket;
        OccupationVector bra = label.bra;
        if (side == Side::Ket || side == Side::Both) {
            factor *= std::sqrt(static_cast<double>(nk));
            ket = ket.shifted(mode, -1);
        }
        if (side == Side::Bra || side == Side::Both) {
            factor *= std::sqrt(static_cast<double>(nb));
            bra = bra.shifted(mode, -1);
        }
        result[KetBra{std::move(ket), std::move(bra)}] += amp * factor;
    }
    return BeamState(state.modes(), std::move(result));
}

double state_trace(const BeamState& state) { return state.trace(); }
double hermitian_error(const BeamState& state) { return state.hermitian_error(); }
BeamState normalize(const BeamState& state) { return state.normalized(); }

BeamState SectorDecomposition::reassemble() const {
    StateBuilder builder(modes);
    for (const auto& [n, sector] : sectors)
        builder.add_scaled(sector.state, Complex(sector.probability, 0.0));
    builder.add_scaled(cross_terms, Complex(1.0, 0.0));
    return builder.build();
}

SectorDecomposition sector_decompose(const BeamState& state, double hermitian_tol) {
    double herm = state.hermitian_error();
    if (herm > hermitian_tol)
        raise(ErrorCode::NonHermitianState,
              "sector decomposition needs a Hermitian state; asymmetry " + std::to_string(herm));

    SectorDecomposition out;
    out.modes = state.modes();
    std::map<int, TermMap> diagonal_blocks;
    TermMap cross;
    for (const auto& [label, amp] : state.terms()) {
        if (label.ket.total() == label.bra.total())
            diagonal_blocks[label.ket.total()][label] = amp;
        else
            cross[label] = amp;
    }
    out.cross_terms = BeamState(state.modes(), std::move(cross));
    for (auto& [n, block] : diagonal_blocks) {
        BeamState raw(state.modes(), std::move(block));
        double p = raw.trace();
        if (std::abs(p) < kPruneEpsilon) continue;
        out.sectors[n] = Sector{p, raw.normalized()};
    }
    return out;
}

double max_abs_difference(const BeamState& a, const BeamState& b) {
    if (a.modes() != b.modes())
        raise(ErrorCode::ModeMismatch, "cannot compare states with different mode counts");
    double worst = 0.0;
    for (const auto& [label, amp] : a.terms())
        worst = std::max(worst, std::abs(amp - b.amplitude(label.ket, label.bra)));
    for (const auto& [label, amp] : b.terms())
        worst = std::max(worst, std::abs(amp - a.amplitude(label.ket, label.bra)));
    return worst;
}

}  // namespace fock
