#pragma once

#include <cstddef>
#include <string>

#include "periodica/coset_table.hpp"
#include "periodica/finite_group.hpp"
#include "periodica/integer_matrix.hpp"
#include "periodica/presentation.hpp"

namespace periodica {

/// A finite group and subgroup whose interval [H, G] matches the interval
/// of the original (possibly infinite) group, indices included.
struct FiniteReduction {
  FiniteGroup group;
  Subgroup subgroup;
};

/// Enumerates the cosets of the presentation's subgroup and takes the
/// permutation image of G on them.
FiniteReduction reduce_presentation(const Presentation& p,
                                    std::size_t max_cosets = kDefaultMaxCosets,
                                    std::size_t max_order = kDefaultMaxGroupOrder);

/// G = Z^d and H = M Z^d: H is normal, so G/H with the trivial subgroup.
FiniteReduction reduce_sublattice(const IntegerMatrix& m,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace periodica
