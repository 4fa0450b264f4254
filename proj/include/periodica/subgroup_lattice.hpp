#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "periodica/bigint.hpp"
#include "periodica/finite_group.hpp"

namespace periodica {

inline constexpr std::size_t kDefaultLatticeLimit = 128;

using SubgroupId = std::size_t;

/// All subgroups of a finite group, ordered canonically, with inclusion,
/// conjugacy classes, normalizers and a memoized Moebius function.
///
/// Everything except the Moebius cache is fixed at construction. Concurrent
/// calls to mobius() are safe and return identical values.
class SubgroupLattice {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  SubgroupId trivial() const noexcept { return 0; }
  SubgroupId top() const noexcept { return subgroups_.size() - 1; }

  std::optional<SubgroupId> find(const ElementSet& members) const;
  /// Throws NotSubgroup if h is not in the lattice.
  SubgroupId id_of(const Subgroup& h) const;

  bool leq(SubgroupId a, SubgroupId b) const;
  /// Ids of all K >= h, canonical order (h first, top last).
  const std::vector<SubgroupId>& supergroups(SubgroupId h) const {
    return supergroups_[h];
  }
  const std::vector<SubgroupId>& subgroups_of(SubgroupId k) const {
    return subgroups_below_[k];
  }

  SubgroupId meet(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;

  /// All J with h <= J <= k, canonical order. Throws NotComparable.
  std::vector<SubgroupId> interval(SubgroupId h, SubgroupId k) const;

  /// Moebius function of the lattice; 0 when h is not below k.
  BigInt mobius(SubgroupId h, SubgroupId k) const;

  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(SubgroupId h) const { return class_of_[h]; }
  /// Members of conjugacy class c, canonical order.
  const std::vector<SubgroupId>& conjugacy_class(std::size_t c) const {
    return classes_[c];
  }
  const std::vector<SubgroupId>& conjugacy_class_of(SubgroupId h) const {
    return classes_[class_of_[h]];
  }
  SubgroupId normalizer(SubgroupId h) const { return normalizer_[h]; }
  bool is_normal(SubgroupId h) const { return normalizer_[h] == top(); }

 private:
  friend SubgroupLattice all_subgroups(const FiniteGroup&, std::size_t);

  explicit SubgroupLattice(FiniteGroup g) : group_(std::move(g)) {}

  const std::vector<BigInt>& mobius_row(SubgroupId h) const;

  struct MobiusCache;

  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> lookup_;
  std::vector<std::vector<SubgroupId>> supergroups_;
  std::vector<std::vector<SubgroupId>> subgroups_below_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<SubgroupId> normalizer_;
  std::shared_ptr<MobiusCache> mobius_cache_;
};

/// Enumerates every subgroup: cyclic subgroups first, then joins with cyclic
/// subgroups until nothing new appears. Throws LatticeLimitExceeded when
/// |G| > lattice_limit.
SubgroupLattice all_subgroups(const FiniteGroup& g,
                              std::size_t lattice_limit = kDefaultLatticeLimit);

}  // namespace periodica
