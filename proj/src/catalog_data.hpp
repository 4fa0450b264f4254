#pragma once

#include <cstddef>

namespace periodica::detail {

struct CatalogEntry {
  const char* name;
  const char* cayley_text;
};

// generated from data/groups at configure time
extern const CatalogEntry kCatalogData[];
extern const std::size_t kCatalogSize;

}  // namespace periodica::detail
