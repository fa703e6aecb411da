#include "fock/combinatorics.hpp"

#include <cmath>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

const BigInt& factorial(int n) {
    if (n < 0) raise(ErrorCode::ParseError, "factorial of negative integer");
    static std::vector<BigInt> cache = {BigInt(1)};
    while (static_cast<int>(cache.size()) <= n) {
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    }
    return cache[static_cast<std::size_t>(n)];
}

BigInt binomial(long long n, long long k) {
    if (n < 0) raise(ErrorCode::ParseError, "binomial with negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: C(n-k+i, i) is an integer at every step
    }
    return result;
}

BigInt multinomial(const OccupationVector& bottom) {
    BigInt result = factorial(bottom.total());
    for (int i = 0; i < bottom.modes(); ++i) {
        result /= factorial(bottom[i]);
    }
    return result;
}

BigInt falling_factorial(long long n, long long k) {
    if (n < 0 || k < 0) raise(ErrorCode::ParseError, "falling factorial with negative argument");
    if (k > n) return 0;
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) result *= (n - i);
    return result;
}

BigInt occupation_factorial(const OccupationVector& occ) {
    BigInt result = 1;
    for (int i = 0; i < occ.modes(); ++i) result *= factorial(occ[i]);
    return result;
}

double to_double(const BigInt& value) {
    return value.convert_to<double>();
}

double sqrt_of(const BigInt& value) {
    return std::sqrt(value.convert_to<double>());
}

}  // namespace fock
