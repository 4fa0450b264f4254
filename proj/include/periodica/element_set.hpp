#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace periodica {

using Element = std::uint32_t;

/// Fixed-width bitset over the element ids 0..n-1 of a finite group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void insert(Element e) { words_[e >> 6U] |= (std::uint64_t{1} << (e & 63U)); }
  void erase(Element e) { words_[e >> 6U] &= ~(std::uint64_t{1} << (e & 63U)); }
  bool contains(Element e) const {
    return (words_[e >> 6U] >> (e & 63U)) & 1U;
  }

  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersection(const ElementSet& other) const;
  std::vector<Element> elements() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

}  // namespace periodica
