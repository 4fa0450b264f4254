#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "periodica/bigint.hpp"

namespace periodica {

using Word32 = std::vector<std::uint32_t>;

/// Number of aperiodic necklaces (Lyndon words) of length n over q letters,
/// psi_cyclic(n, q) / n.
BigInt lyndon_count(std::uint64_t n, std::uint64_t q);

/// True if the word is strictly smaller than each of its proper rotations
/// (hence aperiodic and least in its rotation class).
bool is_lyndon(std::span<const std::uint32_t> word);

/// All Lyndon words of length exactly n over 0..q-1 in lexicographic order,
/// generated by Duval's successor rule. Throws BudgetExceeded when
/// n * q^n > budget.
std::vector<Word32> lyndon_words(std::uint64_t n, std::uint64_t q, std::uint64_t budget);

}  // namespace periodica
