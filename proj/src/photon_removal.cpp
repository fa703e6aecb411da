#include "fock/photon_removal.hpp"

#include <cassert>
#include <cmath>

#include "fock/errors.hpp"

namespace fock {

namespace detail {

BeamState remove_one_inverse_first(const BeamState& rho) {
    StateBuilder out(rho.modes());
    for (const auto& [label, amp] : rho.terms()) {
        int nk = label.ket.total();
        int nb = label.bra.total();
        if (nk == 0 || nb == 0) continue;
        Complex dressed = amp / std::sqrt(static_cast<double>(nk) * nb);
        for (int mode = 0; mode < rho.modes(); ++mode) {
            int mk = label.ket[mode];
            int mb = label.bra[mode];
            if (mk == 0 || mb == 0) continue;
            out.add(label.ket.shifted(mode, -1), label.bra.shifted(mode, -1),
                    dressed * std::sqrt(static_cast<double>(mk) * mb));
        }
    }
    return out.build();
}

BeamState remove_one_inverse_last(const BeamState& rho) {
    StateBuilder out(rho.modes());
    for (const auto& [label, amp] : rho.terms()) {
        for (int mode = 0; mode < rho.modes(); ++mode) {
            int mk = label.ket[mode];
            int mb = label.bra[mode];
            if (mk == 0 || mb == 0) continue;
            OccupationVector ket = label.ket.shifted(mode, -1);
            OccupationVector bra = label.bra.shifted(mode, -1);
            double denom = std::sqrt(static_cast<double>(ket.total() + 1) * (bra.total() + 1));
            out.add(std::move(ket), std::move(bra),
                    amp * std::sqrt(static_cast<double>(mk) * mb) / denom);
        }
    }
    return out.build();
}

}  // namespace detail

BeamState remove_one_fixed_N(const BeamState& rho_N, int N) {
    if (N <= 0) raise(ErrorCode::EmptyState, "cannot remove a photon from a zero-photon state");
    if (rho_N.empty()) raise(ErrorCode::EmptyState, "cannot remove a photon from a null operator");
    StateBuilder out(rho_N.modes());
    for (const auto& [label, amp] : rho_N.terms()) {
        if (label.ket.total() != N || label.bra.total() != N)
            raise(ErrorCode::NotFixedN,
                  "term " + label.ket.str() + " x " + label.bra.str() + " is not in the " +
                      std::to_string(N) + "-photon sector");
        Complex scaled = amp / static_cast<double>(N);
        for (int mode = 0; mode < rho_N.modes(); ++mode) {
            int mk = label.ket[mode];
            int mb = label.bra[mode];
            if (mk == 0 || mb == 0) continue;
            out.add(label.ket.shifted(mode, -1), label.bra.shifted(mode, -1),
                    scaled * std::sqrt(static_cast<double>(mk) * mb));
        }
    }
    return out.build();
}

RemovalResult remove_one_general(const BeamState& rho) {
    BeamState reduced = detail::remove_one_inverse_first(rho);
#ifndef NDEBUG
    assert(max_abs_difference(reduced, detail::remove_one_inverse_last(rho)) < 1e-13);
#endif
    return RemovalResult{reduced, 1, reduced.trace()};
}

RemovalResult remove_k(const BeamState& rho, int k) {
    if (k < 0) raise(ErrorCode::BadSubsetSize, "cannot remove a negative photon count");
    BeamState current = rho;
    for (int step = 0; step < k; ++step) current = remove_one_general(current).state;
    return RemovalResult{current, k, current.trace()};
}

BeamState subset_of_fixed_N(const BeamState& rho_N, int N, int q) {
    if (q < 0 || q > N)
        raise(ErrorCode::BadSubsetSize, "subset size " + std::to_string(q) +
                                            " outside [0, " + std::to_string(N) + "]");
    BeamState current = rho_N;
    for (int n = N; n > q; --n) current = remove_one_fixed_N(current, n);
    return current;
}

}  // namespace fock
