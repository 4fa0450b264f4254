#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "periodica/finite_group.hpp"
#include "periodica/presentation.hpp"

namespace periodica {

inline constexpr std::size_t kDefaultMaxCosets = 100000;
inline constexpr std::size_t kDefaultLowIndexBudget = 12;

/// Right action of generators on cosets of H. Coset 0 is H itself; column
/// 2k is generator k and column 2k+1 its inverse.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t generator_count, std::size_t cosets);

  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t column_count() const noexcept { return 2 * generators_; }
  std::size_t size() const noexcept { return cosets_; }

  static std::size_t column(Letter l) {
    return 2 * static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1) + (l < 0 ? 1 : 0);
  }

  std::int32_t at(std::size_t coset, std::size_t col) const {
    return entries_[coset * column_count() + col];
  }
  void set(std::size_t coset, std::size_t col, std::int32_t value) {
    entries_[coset * column_count() + col] = value;
  }
  /// Follows a word from a coset; kUndefined if the path leaves the table.
  std::int32_t follow(std::int32_t coset, const Word& w) const;

  bool is_complete() const;
  /// Row r column x = s implies row s column x^-1 = r.
  bool is_consistent() const;
  bool is_transitive() const;
  /// Every relator is a closed loop at every coset.
  bool satisfies(const std::vector<Word>& relators) const;

  /// Renumbers cosets in breadth-first order from `base` (which becomes 0).
  CosetTable standardized(std::size_t base = 0) const;

  /// Permutation of the cosets induced by each generator.
  std::vector<Permutation> generator_permutations() const;

  const std::vector<std::int32_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend auto operator<=>(const CosetTable& a, const CosetTable& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.entries_ <=> b.entries_;
  }

 private:
  std::size_t generators_ = 0;
  std::size_t cosets_ = 0;
  std::vector<std::int32_t> entries_;
};

/// Todd-Coxeter enumeration of the cosets of <subgroup_words> in the
/// presented group (HLT strategy, coincidences processed immediately). The
/// result is complete and standardized. Throws CosetLimitExceeded when more
/// than max_cosets cosets are alive at once; this does not prove the index
/// is infinite.
CosetTable coset_enumerate(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

/// Image of G acting on the cosets, plus the stabiliser of coset 0. The
/// kernel of the action is the core of H, so [H, G] is isomorphic to
/// [stabilizer, group] with the same indices.
struct CosetAction {
  FiniteGroup group;
  Subgroup stabilizer;
  std::vector<Permutation> elements;
};

CosetAction coset_action_group(const CosetTable& table,
                               std::size_t max_order = kDefaultMaxGroupOrder);

struct LowIndexClass {
  CosetTable table;           // standardized, lexicographically least in its class
  std::size_t index = 0;
  std::size_t conjugates = 0;  // size of the conjugacy class
};

/// Conjugacy classes of subgroups of index <= max_index by backtracking over
/// standardized partial coset tables. Ordered by index, then table.
/// Subgroup words in the presentation are ignored. Throws BudgetExceeded
/// when max_index > budget.
std::vector<LowIndexClass> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                               std::size_t budget = kDefaultLowIndexBudget);

/// Number of distinct standardized tables over all base points: the size of
/// the conjugacy class of the subgroup the complete table describes.
std::size_t conjugacy_class_size(const CosetTable& table);

}  // namespace periodica
