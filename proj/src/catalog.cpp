#include "periodica/catalog.hpp"

#include <array>

#include "catalog_data.hpp"
#include "periodica/error.hpp"
#include "periodica/group_io.hpp"

namespace periodica {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::kCatalogSize; ++i) out.emplace_back(detail::kCatalogData[i].name);
    return out;
  }();
  return names;
}

FiniteGroup builtin_group(std::string_view name) {
  for (std::size_t i = 0; i < detail::kCatalogSize; ++i) {
    if (name == detail::kCatalogData[i].name) {
      return read_cayley_group(detail::kCatalogData[i].cayley_text, std::string(name));
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown builtin group '" + std::string(name) + "'");
}

std::optional<std::size_t> known_group_count(std::size_t n) {
  // OEIS A000001
  static constexpr std::array<std::size_t, 33> counts = {
      0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14,
      1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51};
  if (n == 0 || n >= counts.size()) return std::nullopt;
  return counts[n];
}

std::vector<const FiniteGroup*> GroupCatalog::of_order(std::size_t n) const {
  std::vector<const FiniteGroup*> out;
  for (const auto& g : groups_) {
    if (g.order() == n) out.push_back(&g);
  }
  return out;
}

bool GroupCatalog::covers_order(std::size_t n) const {
  auto known = known_group_count(n);
  return known && of_order(n).size() == *known;
}

GroupCatalog builtin_catalog() {
  std::vector<FiniteGroup> groups;
  for (const auto& name : builtin_names()) groups.push_back(builtin_group(name));
  return GroupCatalog(std::move(groups));
}

}  // namespace periodica
