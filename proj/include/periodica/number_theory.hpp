#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace periodica {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Classical number-theoretic Moebius function.
int mobius_number(std::uint64_t n);

/// Positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace periodica
