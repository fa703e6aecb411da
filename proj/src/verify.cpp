#include "fock/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>

#include "fock/applications.hpp"
#include "fock/beam_state.hpp"
#include "fock/correlations.hpp"
#include "fock/errors.hpp"
#include "fock/first_quantized.hpp"
#include "fock/linear_optics.hpp"
#include "fock/loss_channel.hpp"
#include "fock/photon_removal.hpp"
#include "fock/random_states.hpp"
#include "fock/rng.hpp"
#include "fock/subset_states.hpp"

namespace fock {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

/// Per-suite seed derivation: FNV-1a over the suite token, folded with the
/// user seed, so suites stay independent and reorderable.
unsigned long long mix_seed(unsigned long long seed, const char* tag) {
    unsigned long long h = 1469598103934665603ull;
    for (const char* p = tag; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    return h ^ seed;
}

void update_max(double& acc, double v) { acc = std::max(acc, v); }

std::vector<OccupationVector> occupations_up_to(int d, int max_total) {
    std::vector<OccupationVector> out;
    for (int n = 0; n <= max_total; ++n)
        for (auto& occ : enumerate_occupations(d, n)) out.push_back(std::move(occ));
    return out;
}

std::vector<CorrelationIndex> balanced_pairs(int d, int order) {
    std::vector<CorrelationIndex> out;
    auto patterns = enumerate_occupations(d, order);
    for (const auto& k : patterns)
        for (const auto& l : patterns) out.emplace_back(k, l);
    return out;
}

int top_sector(const SectorDecomposition& decomp) {
    int top = 0;
    for (const auto& [n, sector] : decomp.sectors) top = std::max(top, n);
    return top;
}

BeamState state_of_kind(StateKind kind, int d, int n_max, Rng& rng) {
    switch (kind) {
        case StateKind::Pure:
            return random_pure(d, n_max, rng);
        case StateKind::Mixed:
            return random_mixed_block_diagonal(d, n_max, 3, rng);
        case StateKind::CrossCoherent:
            return random_cross_coherent(d, n_max, 2, rng);
    }
    raise(ErrorCode::InternalConsistency, "unreachable state kind");
}

constexpr StateKind kKindCycle[3] = {StateKind::Pure, StateKind::Mixed,
                                     StateKind::CrossCoherent};

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

CheckResult make_check(std::string name, double value, double threshold, Direction direction) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.direction = direction;
    c.pass = (direction == Direction::AtMost) ? (value <= threshold) : (value >= threshold);
    return c;
}

SuiteReport verify_oracle(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "oracle"));
    double basis_err = 0.0;
    double random_err = 0.0;
    double slot_choice_err = 0.0;

    for (int d = 1; d <= 3; ++d) {
        for (int N = 1; N <= 5; ++N) {
            auto basis = enumerate_occupations(d, N);
            for (const auto& m : basis) {
                for (const auto& n : basis) {
                    BeamState term = BeamState::ket_bra(m, n);
                    BeamState reduced = remove_one_fixed_N(term, N);
                    FirstQuantizedState embedded = to_first_quantized(term, N);
                    BeamState oracle = from_first_quantized(trace_out_slot(embedded));
                    update_max(basis_err, max_abs_difference(reduced, oracle));
                }
            }
            for (int trial = 0; trial < 50; ++trial) {
                BeamState psi = random_pure_fixed_N(d, N, rng);
                BeamState reduced = remove_one_fixed_N(psi, N);
                FirstQuantizedState embedded = to_first_quantized(psi, N);
                BeamState oracle = from_first_quantized(trace_out_slot(embedded));
                update_max(random_err, max_abs_difference(reduced, oracle));
                if (trial == 0 && N >= 2) {
                    BeamState other_slot =
                        from_first_quantized(trace_out_slot(embedded, N - 1));
                    update_max(slot_choice_err, max_abs_difference(oracle, other_slot));
                }
            }
        }
    }

    SuiteReport report;
    report.suite = "oracle";
    report.checks.push_back(make_check("slot-trace-basis", basis_err, 1e-10));
    report.checks.push_back(make_check("slot-trace-random-pure", random_err, 1e-10));
    report.checks.push_back(make_check("slot-choice-irrelevance", slot_choice_err, 1e-12));
    report.wall_seconds = timer.seconds();
    report.checks.push_back(make_check("oracle-wall-seconds", report.wall_seconds, 10.0));
    return report;
}

SuiteReport verify_eq8(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq8"));
    constexpr std::pair<int, int> combos[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                              {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                              {3, 1}, {3, 2}, {3, 3}, {3, 4}};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto [d, N] = combos[trial % std::size(combos)];
        BeamState rho = (trial % 2 == 0) ? random_pure_fixed_N(d, N, rng)
                                         : random_mixed_fixed_N(d, N, 3, rng);
        for (int order = 0; order <= N; ++order) {
            for (const auto& idx : balanced_pairs(d, order)) {
                ScalingPair sc = scaling_check_fixed_N(rho, N, idx);
                update_max(worst, std::abs(sc.lhs - sc.rhs));
            }
        }
    }
    SuiteReport report;
    report.suite = "eq8";
    report.checks.push_back(make_check("fixed-sector-scaling", worst, 1e-11));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_eq9(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq9"));
    constexpr std::pair<int, int> combos[] = {{1, 5}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
    double removal_err = 0.0;
    double spread_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto [d, n_max] = combos[trial % std::size(combos)];
        BeamState rho = random_cross_coherent(d, n_max, 2, rng);
        int cap = (d == 1) ? 4 : (d == 2) ? 3 : 2;
        auto patterns = occupations_up_to(d, cap);
        std::vector<CorrelationIndex> indices;
        for (const auto& k : patterns)
            for (const auto& l : patterns) indices.emplace_back(k, l);
        if (d == 3) {
            indices.emplace_back(OccupationVector({2, 1, 0}), OccupationVector({0, 1, 2}));
            indices.emplace_back(OccupationVector({1, 1, 1}), OccupationVector({3, 0, 0}));
            indices.emplace_back(OccupationVector({2, 2, 0}), OccupationVector({1, 1, 2}));
        }
        for (const auto& idx : indices) {
            GeneralScaling g = scaling_general(rho, idx);
            for (const auto& form : g.rhs_forms)
                update_max(removal_err, std::abs(g.lhs - form));
            update_max(spread_err, std::abs(g.rhs_forms[0] - g.rhs_forms[1]));
            update_max(spread_err, std::abs(g.rhs_forms[0] - g.rhs_forms[2]));
            update_max(spread_err, std::abs(g.rhs_forms[1] - g.rhs_forms[2]));
        }
    }
    SuiteReport report;
    report.suite = "eq9";
    report.checks.push_back(make_check("removal-vs-weighted-sum", removal_err, 1e-12));
    report.checks.push_back(make_check("triple-form-spread", spread_err, 1e-12));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_eq13(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq13"));
    struct Family {
        int d;
        std::vector<int> pattern;
    };
    const Family families[] = {{1, {1}}, {1, {2}}, {2, {1, 0}}, {2, {1, 1}}};
    constexpr int kMaxQ = 4;
    constexpr int kTopSector = 6;

    SuiteReport report;
    report.suite = "eq13";
    for (const auto& family : families) {
        OccupationVector pattern(family.pattern);
        CorrelationIndex idx(pattern, pattern);
        int order = pattern.total();
        std::string tag = "order" + std::to_string(order) +
                          (family.d == 2 ? "-twomode" : "-onemode");

        for (int q = order; q <= kMaxQ; ++q) {
            double worst_violation = 0.0;
            for (int trial = 0; trial < 100; ++trial) {
                int n_low, n_high;
                if (q == order) {
                    n_low = q + trial % 2;
                    n_high = std::min(kTopSector, n_low + 1 + trial % 3);
                } else {
                    n_low = order + trial % (q - order);
                    n_high = q + trial % (kTopSector - q + 1);
                }
                double p = 0.3 + 0.4 * rng.uniform();
                BeamState low = random_pure_fixed_N(family.d, n_low, rng);
                BeamState high = random_pure_fixed_N(family.d, n_high, rng);
                BeamState rho =
                    low.scaled(Complex(p, 0.0)).plus(high.scaled(Complex(1.0 - p, 0.0)));
                UniquenessPair u = uniqueness_counterexample(rho, idx, q);
                update_max(worst_violation, std::abs(u.claimed - u.actual));
            }
            if (q == order)
                report.checks.push_back(
                    make_check("exact-at-matching-q-" + tag, worst_violation, 1e-10));
            else
                report.checks.push_back(make_check(
                    "violation-found-" + tag + "-q" + std::to_string(q), worst_violation,
                    1e-6, Direction::AtLeast));
        }
    }
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_eq14(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq14"));
    constexpr std::pair<int, int> combos[] = {{1, 5}, {1, 6}, {2, 4}, {2, 5},
                                              {2, 6}, {3, 3}, {3, 4}};
    double path_err = 0.0;
    double trace_err = 0.0;
    double herm_err = 0.0;
    double min_eig = 0.0;
    double immunity_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto [d, n_max] = combos[trial % std::size(combos)];
        StateKind kind = kKindCycle[trial % 3];
        BeamState rho = state_of_kind(kind, d, n_max, rng);
        int top = top_sector(sector_decompose(rho));
        for (int q = 1; q <= top; ++q) {
            BeamState convex = random_subset_state(rho, q);
            BeamState direct = random_subset_state_direct(rho, q);
            update_max(path_err, max_abs_difference(convex, direct));
            update_max(trace_err, std::abs(direct.trace() - 1.0));
            update_max(herm_err, direct.hermitian_error());
            min_eig = std::min(min_eig, min_eigenvalue_on_sector(direct, q));
        }
        if (kind == StateKind::Mixed && top >= 2) {
            // Cross-sector coherences must never leak into the subset state.
            OccupationVector lo = enumerate_occupations(d, 1).front();
            OccupationVector hi = enumerate_occupations(d, top).front();
            BeamState bump = BeamState::ket_bra(lo, hi, Complex(0.05, 0.02))
                                 .plus(BeamState::ket_bra(hi, lo, Complex(0.05, -0.02)));
            BeamState perturbed = rho.plus(bump);
            for (int q = 1; q <= top; ++q)
                update_max(immunity_err,
                           max_abs_difference(random_subset_state_direct(rho, q),
                                              random_subset_state_direct(perturbed, q)));
        }
    }
    SuiteReport report;
    report.suite = "eq14";
    report.checks.push_back(make_check("path-equivalence", path_err, 1e-10));
    report.checks.push_back(make_check("subset-trace", trace_err, 1e-10));
    report.checks.push_back(make_check("subset-hermiticity", herm_err, 1e-10));
    report.checks.push_back(
        make_check("psd-min-eigenvalue", min_eig, -1e-10, Direction::AtLeast));
    report.checks.push_back(make_check("cross-term-immunity", immunity_err, 1e-12));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_eq16(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq16"));
    constexpr std::pair<int, int> combos[] = {{1, 5}, {1, 6}, {2, 4}, {2, 5},
                                              {2, 6}, {3, 3}, {3, 4}};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto [d, n_max] = combos[trial % std::size(combos)];
        BeamState rho = state_of_kind(kKindCycle[trial % 3], d, n_max, rng);
        SectorDecomposition decomp = sector_decompose(rho);
        int top = top_sector(decomp);
        for (int q = 1; q <= top; ++q) {
            double norm = subset_weights(decomp, q).normalization;
            BeamState sigma = random_subset_state_direct(rho, q);
            bool first = true;
            for (const auto& idx : balanced_pairs(d, q)) {
                Complex direct = expectation(rho, idx);
                Complex via = norm * expectation(sigma, idx);
                update_max(worst, std::abs(direct - via));
                if (first) {
                    // Exercise the bundled public operation on one index too.
                    ReconstructionPair pair = reconstruct_expectation(rho, idx);
                    update_max(worst, std::abs(pair.direct - pair.via_subset));
                    first = false;
                }
            }
        }
    }
    SuiteReport report;
    report.suite = "eq16";
    report.checks.push_back(make_check("reconstruction", worst, 1e-10));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_eq17(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "eq17"));
    constexpr double etas[] = {0.3, 0.5, 0.9};
    double fixed_err = 0.0;
    double general_err = 0.0;
    double trace_err = 0.0;
    double semigroup_err = 0.0;

    constexpr std::pair<int, int> fixed_combos[] = {{1, 1}, {1, 3}, {1, 6}, {2, 2}, {2, 4},
                                                    {2, 6}, {3, 2}, {3, 3}, {3, 4}};
    for (int trial = 0; trial < 27; ++trial) {
        auto [d, N] = fixed_combos[trial % std::size(fixed_combos)];
        BeamState rho = (trial % 2 == 0) ? random_pure_fixed_N(d, N, rng)
                                         : random_mixed_fixed_N(d, N, 3, rng);
        for (double eta : etas) {
            BeamState kraus = loss_kraus(rho, eta);
            BeamState decomposed = loss_fixed_N_decomposition(rho, N, eta);
            update_max(fixed_err, max_abs_difference(kraus, decomposed));
            update_max(trace_err, std::abs(kraus.trace() - rho.trace()));
            update_max(trace_err, std::abs(decomposed.trace() - rho.trace()));
        }
    }

    constexpr std::pair<int, int> general_combos[] = {{1, 5}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
    for (int trial = 0; trial < 30; ++trial) {
        auto [d, n_max] = general_combos[trial % std::size(general_combos)];
        BeamState rho = state_of_kind(kKindCycle[trial % 3], d, n_max, rng);
        for (double eta : etas) {
            BeamState kraus = loss_kraus(rho, eta);
            BeamState decomposed = loss_general_decomposition(rho, eta);
            update_max(general_err, max_abs_difference(kraus, decomposed));
            update_max(trace_err, std::abs(kraus.trace() - rho.trace()));
            update_max(trace_err, std::abs(decomposed.trace() - rho.trace()));
        }
        if (trial < 15) {
            BeamState chained = loss_kraus(loss_kraus(rho, 0.9), 0.5);
            update_max(semigroup_err, max_abs_difference(chained, loss_kraus(rho, 0.45)));
            BeamState chained2 = loss_kraus(loss_kraus(rho, 0.3), 0.9);
            update_max(semigroup_err, max_abs_difference(chained2, loss_kraus(rho, 0.27)));
        }
    }

    SuiteReport report;
    report.suite = "eq17";
    report.checks.push_back(make_check("fixed-sector-vs-kraus", fixed_err, 1e-10));
    report.checks.push_back(make_check("general-vs-kraus", general_err, 1e-10));
    report.checks.push_back(make_check("semigroup-composition", semigroup_err, 1e-10));
    report.checks.push_back(make_check("trace-preservation", trace_err, 1e-12));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_commutation(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "commutation"));
    constexpr std::pair<int, int> combos[] = {{2, 3}, {2, 4}, {3, 3}, {3, 4}};
    double removal_err = 0.0;
    double loss_err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        auto [d, n_max] = combos[trial % std::size(combos)];
        ModeUnitary U = random_unitary(d, rng);
        BeamState rho = state_of_kind(kKindCycle[trial % 3], d, n_max, rng);
        BeamState lhs = remove_one_general(apply_unitary(rho, U)).state;
        BeamState rhs = apply_unitary(remove_one_general(rho).state, U);
        update_max(removal_err, max_abs_difference(lhs, rhs));
        auto [a, b] = loss_commutes_with_network(rho, 0.7, U);
        update_max(loss_err, max_abs_difference(a, b));
    }

    OccupationVector one_one({1, 1});
    BeamState hom = apply_unitary(BeamState::ket_bra(one_one, one_one),
                                  ModeUnitary::beam_splitter_50_50());
    double hom_dip = std::abs(hom.amplitude(one_one, one_one));
    OccupationVector two_zero({2, 0});
    OccupationVector zero_two({0, 2});
    double halves =
        std::max(std::abs(hom.amplitude(two_zero, two_zero) - Complex(0.5, 0.0)),
                 std::abs(hom.amplitude(zero_two, zero_two) - Complex(0.5, 0.0)));

    SuiteReport report;
    report.suite = "commutation";
    report.checks.push_back(make_check("removal-network-covariance", removal_err, 1e-9));
    report.checks.push_back(make_check("loss-network-covariance", loss_err, 1e-9));
    report.checks.push_back(make_check("hom-null", hom_dip, 1e-12));
    report.checks.push_back(make_check("hom-bunched-halves", halves, 1e-12));
    report.wall_seconds = timer.seconds();
    return report;
}

SuiteReport verify_purity(unsigned long long seed) {
    Timer timer;
    Rng rng(mix_seed(seed, "purity"));

    double formula_err = 0.0;
    constexpr std::pair<int, int> combos[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                                              {3, 2}, {3, 3}, {3, 4}};
    for (const auto& [d, N] : combos) {
        for (int trial = 0; trial < 4; ++trial) {
            BeamState psi = random_pure_fixed_N(d, N, rng);
            for (int q = 0; q <= N; ++q) {
                double formula = reduced_purity_formula(psi, N, q);
                double direct = purity_direct(subset_of_fixed_N(psi, N, q));
                update_max(formula_err, std::abs(formula - direct));
            }
        }
    }

    OccupationVector one_one({1, 1});
    double balanced_err =
        std::abs(reduced_purity_formula(BeamState::ket_bra(one_one, one_one), 2, 1) - 0.5);

    double coherent_err = 0.0;
    for (int N = 1; N <= 5; ++N) {
        OccupationVector all_up({N, 0});
        BeamState spin_coherent = BeamState::ket_bra(all_up, all_up);
        for (int q = 0; q <= N; ++q)
            update_max(coherent_err,
                       std::abs(reduced_purity_formula(spin_coherent, N, q) - 1.0));
    }

    double stokes_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        int n_max = 1 + trial % 5;
        BeamState rho = state_of_kind(kKindCycle[trial % 3], 2, n_max, rng);
        StokesVector s = stokes(rho);
        if (s.s0 < 1e-6) continue;  // no photons, no Bloch vector; seeded so deterministic
        auto bloch = bloch_of_random_photon(rho);
        update_max(stokes_err, std::abs(bloch[0] - s.s1 / s.s0));
        update_max(stokes_err, std::abs(bloch[1] - s.s2 / s.s0));
        update_max(stokes_err, std::abs(bloch[2] - s.s3 / s.s0));
    }

    double projector_err = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        int n_max = 2 + trial % 5;
        BeamState rho = state_of_kind(kKindCycle[trial % 3], 1, n_max, rng);
        for (int m = 0; m <= n_max; ++m) {
            auto [series, direct] = projector_expectation_series(rho, m);
            update_max(projector_err, std::abs(series - direct));
        }
    }

    SuiteReport report;
    report.suite = "purity";
    report.checks.push_back(make_check("purity-formula-vs-direct", formula_err, 1e-10));
    report.checks.push_back(make_check("purity-balanced-pair-half", balanced_err, 1e-12));
    report.checks.push_back(make_check("purity-spin-coherent-one", coherent_err, 1e-12));
    report.checks.push_back(make_check("stokes-bloch", stokes_err, 1e-11));
    report.checks.push_back(make_check("projector-series", projector_err, 1e-10));
    report.wall_seconds = timer.seconds();
    return report;
}

const std::vector<std::string>& suite_tokens() {
    static const std::vector<std::string> tokens = {
        "oracle", "eq8", "eq9", "eq13", "eq14", "eq16", "eq17", "commutation", "purity"};
    return tokens;
}

SuiteReport run_suite(const std::string& token, unsigned long long seed) {
    if (token == "oracle") return verify_oracle(seed);
    if (token == "eq8") return verify_eq8(seed);
    if (token == "eq9") return verify_eq9(seed);
    if (token == "eq13") return verify_eq13(seed);
    if (token == "eq14") return verify_eq14(seed);
    if (token == "eq16") return verify_eq16(seed);
    if (token == "eq17" || token == "loss") return verify_eq17(seed);
    if (token == "commutation") return verify_commutation(seed);
    if (token == "purity") return verify_purity(seed);
    raise(ErrorCode::ParseError,
          "unknown verify suite \"" + token +
              "\"; expected one of oracle, eq8, eq9, eq13, eq14, eq16, eq17, commutation, "
              "purity, all");
}

std::vector<SuiteReport> verify_all(unsigned long long seed) {
    std::vector<SuiteReport> reports;
    reports.push_back(verify_oracle(seed));
    reports.push_back(verify_eq8(seed));
    reports.push_back(verify_eq9(seed));
    reports.push_back(verify_eq13(seed));
    reports.push_back(verify_eq14(seed));
    reports.push_back(verify_eq16(seed));
    reports.push_back(verify_eq17(seed));
    reports.push_back(verify_commutation(seed));
    reports.push_back(verify_purity(seed));
    return reports;
}

}  // namespace fock
