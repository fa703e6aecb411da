#ifndef FOCK_COMBINATORICS_HPP
#define FOCK_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "fock/occupation.hpp"

namespace fock {

// Exact integer combinatorics shared by every module. Results stay in
// big-integer form until the final conversion to double, so binomial ratios
// cancel before any rounding happens.
using BigInt = boost::multiprecision::cpp_int;

/// n!, cached. n must be non-negative.
const BigInt& factorial(int n);

/// C(n, k); zero for k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// (sum n_i)! / prod(n_i!) for an occupation vector.
BigInt multinomial(const OccupationVector& bottom);

/// n (n-1) ... (n-k+1); 1 for k = 0, 0 for k > n.
BigInt falling_factorial(long long n, long long k);

/// prod_i n_i! for an occupation vector.
BigInt occupation_factorial(const OccupationVector& occ);

double to_double(const BigInt& value);

/// sqrt of an exact non-negative integer, taken once, after the exact product.
double sqrt_of(const BigInt& value);

}  // namespace fock

#endif
