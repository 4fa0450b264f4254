#include "periodica/element_set.hpp"

#include <bit>

namespace periodica {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
  }
  return out;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      auto bit = static_cast<unsigned>(std::countr_zero(w));
      out.push_back(static_cast<Element>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : s.words()) {
    h ^= std::hash<std::uint64_t>{}(w);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace periodica
