#include "periodica/necklace.hpp"

#include "periodica/counting.hpp"
#include "periodica/error.hpp"

namespace periodica {

BigInt lyndon_count(std::uint64_t n, std::uint64_t q) {
  auto total = psi_cyclic(n, q);
  if (total % n != 0) {
    throw Error(ErrorCode::DivisibilityViolation, "psi_cyclic(n, q) not divisible by n");
  }
  return total / n;
}

bool is_lyndon(std::span<const std::uint32_t> word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // compare word with its rotation starting at r
    int cmp = 0;
    for (std::size_t i = 0; i < n && cmp == 0; ++i) {
      auto a = word[i];
      auto b = word[(r + i) % n];
      if (a != b) cmp = a < b ? -1 : 1;
    }
    if (cmp >= 0) return false;
  }
  return true;
}

std::vector<Word32> lyndon_words(std::uint64_t n, std::uint64_t q, std::uint64_t budget) {
  if (q < 2) throw Error(ErrorCode::AlphabetTooSmall, "alphabet size below 2");
  if (n == 0) throw Error(ErrorCode::InvalidInput, "length must be positive");
  if (BigInt(n) * fix_count(n, q) > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "n * q^n exceeds enumeration budget " + std::to_string(budget));
  }
  std::vector<Word32> out;
  Word32 w{0};
  const auto top = static_cast<std::uint32_t>(q - 1);
  while (!w.empty()) {
    if (w.size() == n) out.push_back(w);
    // extend periodically to length n, strip trailing maximal letters, bump
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

}  // namespace periodica
