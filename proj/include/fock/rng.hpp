#ifndef FOCK_RNG_HPP
#define FOCK_RNG_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "fock/beam_state.hpp"

namespace fock {

/// Seeded, portable randomness with the exact derivations documented in the
/// README: mt19937_64 raw draws, uniforms as ((x >> 11) + 0.5) * 2^-53 (open
/// interval, never 0 or 1), normals by Box-Muller from two fresh uniforms.
/// Same seed, same platform-independent stream.
class Rng {
public:
    explicit Rng(unsigned long long seed) : engine_(seed) {}

    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex complex_normal() {
        double re = normal();
        double im = normal();
        return Complex(re, im);
    }

    /// Inclusive range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fock

#endif
