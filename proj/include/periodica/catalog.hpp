#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "periodica/finite_group.hpp"

namespace periodica {

/// Names of the shipped Cayley tables, in catalog order.
const std::vector<std::string>& builtin_names();

/// Throws InvalidInput for an unknown name.
FiniteGroup builtin_group(std::string_view name);

/// Number of isomorphism types of groups of order n, for n <= 32.
std::optional<std::size_t> known_group_count(std::size_t n);

/// A list of finite groups, assumed pairwise non-isomorphic. An order counts
/// as covered when the catalog holds as many groups of that order as exist.
class GroupCatalog {
 public:
  GroupCatalog() = default;
  explicit GroupCatalog(std::vector<FiniteGroup> groups) : groups_(std::move(groups)) {}

  const std::vector<FiniteGroup>& groups() const noexcept { return groups_; }
  std::vector<const FiniteGroup*> of_order(std::size_t n) const;
  bool covers_order(std::size_t n) const;

 private:
  std::vector<FiniteGroup> groups_;
};

GroupCatalog builtin_catalog();

}  // namespace periodica
