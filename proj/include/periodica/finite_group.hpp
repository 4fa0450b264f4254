#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "periodica/element_set.hpp"

namespace periodica {

inline constexpr std::size_t kDefaultAssociativityBound = 256;
inline constexpr std::size_t kDefaultMaxGroupOrder = 1024;

/// A finite group given by its complete multiplication table.
///
/// Element ids are 0..order()-1 and the identity is always 0. Instances are
/// immutable once built; use the factory functions below to construct one.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g h g^-1
  Element conjugate(Element h, Element g) const { return mul(mul(g, h), inv(g)); }
  Element power(Element a, std::uint64_t e) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Row-major copy of the multiplication table.
  std::vector<std::vector<Element>> table() const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet all_elements() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> table, std::string label);

  friend FiniteGroup make_group_unchecked(std::size_t, std::vector<Element>,
                                          std::string);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string label_;
};

/// Builds a group from a table already known to be valid with identity 0.
FiniteGroup make_group_unchecked(std::size_t n, std::vector<Element> table,
                                 std::string label);

/// Validates a Cayley table and relabels elements so the identity becomes 0
/// (identity first, the remaining elements keep their relative order).
/// Associativity is checked for n <= associativity_bound.
FiniteGroup group_from_cayley_table(
    const std::vector<std::vector<std::int64_t>>& table,
    std::string label = {},
    std::size_t associativity_bound = kDefaultAssociativityBound);

using Permutation = std::vector<std::uint32_t>;

/// Product in the right-action convention: (a*b)(i) = b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);

struct PermutationClosure {
  FiniteGroup group;
  /// elements[g] is the permutation realising element g.
  std::vector<Permutation> elements;
};

/// Breadth-first closure of the generators: identity first, then discovery
/// order. Throws OrderLimitExceeded past max_order.
PermutationClosure permutation_closure(std::span<const Permutation> generators,
                                       std::size_t degree,
                                       std::size_t max_order = kDefaultMaxGroupOrder);

FiniteGroup group_from_permutations(std::span<const Permutation> generators,
                                    std::size_t degree, std::string label = {},
                                    std::size_t max_order = kDefaultMaxGroupOrder);

/// Cyclic group Z_n with element k the residue k.
FiniteGroup cyclic_group(std::size_t n);

/// Z_{m_1} + ... + Z_{m_k}; element ids are mixed-radix with the first
/// factor as least significant digit.
FiniteGroup direct_sum_of_cyclics(std::span<const std::uint64_t> moduli,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

/// A subset of a finite group that is closed under multiplication.
class Subgroup {
 public:
  Subgroup() = default;
  /// Throws NotSubgroup if members is not a subgroup of g.
  Subgroup(const FiniteGroup& g, ElementSet members);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_order_ / elements_.size(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  bool contains(Element e) const { return mask_.contains(e); }
  const ElementSet& mask() const noexcept { return mask_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.mask_ == b.mask_;
  }

 private:
  friend Subgroup make_subgroup_unchecked(std::size_t, ElementSet);

  std::size_t parent_order_ = 0;
  ElementSet mask_;
  std::vector<Element> elements_;
};

Subgroup make_subgroup_unchecked(std::size_t parent_order, ElementSet members);

/// Canonical order: by order, then lexicographically by sorted members.
bool canonical_less(const Subgroup& a, const Subgroup& b);

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);

bool is_subgroup(const FiniteGroup& g, const ElementSet& members);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// g H g^-1
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& h, Element by);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Derived subgroup [G,G].
Subgroup commutator_subgroup(const FiniteGroup& g);

/// The subgroup as a group in its own right; members are relabelled in
/// increasing id order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                              std::string label = {});

/// G/N on cosets, ordered by smallest member; the identity coset is 0.
/// Throws NotNormal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, std::string label = {});

/// Invariant factors d_1 | d_2 | ... | d_k (all > 1) of a finite abelian group.
/// Throws InvalidInput if g is not abelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);

/// Order plus the abelianization's invariants; enough to tell apart every
/// small group this project deals with without isomorphism testing.
struct GroupFingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::vector<std::uint64_t> abelianization;

  /// "1", "Z6", "Z2xZ2", or e.g. "nonabelian(order 6, ab Z2)".
  std::string name() const;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

}  // namespace periodica
