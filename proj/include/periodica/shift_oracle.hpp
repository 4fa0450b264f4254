#pragma once

#include <cstdint>
#include <vector>

#include "periodica/bigint.hpp"
#include "periodica/finite_group.hpp"
#include "periodica/subgroup_lattice.hpp"

namespace periodica {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24U;

/// A function G -> {0..q-1}; letters[h] is the value at element h.
struct Configuration {
  std::vector<std::uint32_t> letters;
  std::uint64_t q = 2;

  /// sum letters[h] q^h; requires q^|G| to fit in 64 bits.
  std::uint64_t encode() const;
  static Configuration decode(std::uint64_t code, std::size_t n, std::uint64_t q);

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Left-multiplication permutations pi_g(h) = g h, which realise the shift
/// (g.x)(h) = x(g^-1 h) as y[g h] = x[h].
class ShiftTables {
 public:
  explicit ShiftTables(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return *group_; }
  Element position(Element g, Element h) const { return group_->mul(g, h); }
  /// Number of cycles of pi_g.
  std::size_t cycle_count(Element g) const;

 private:
  const FiniteGroup* group_;
};

Configuration shift(const Configuration& x, Element g, const ShiftTables& tables);

Subgroup stabilizer(const Configuration& x, const ShiftTables& tables);

struct OracleOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned jobs = 1;
};

/// Counts configurations whose stabiliser is exactly H by walking Fix(H):
/// every labelling of the right cosets Hg. Throws BudgetExceeded when
/// q^[G:H] > budget. Work is split into `jobs` disjoint chunks.
BigInt brute_psi(const FiniteGroup& g, const Subgroup& h, std::uint64_t q,
                 const OracleOptions& options = {});

struct ClassCensus {
  std::size_t class_index = 0;
  BigInt psi_class;
  BigInt alpha;
};

/// Splits all q^|G| configurations into orbits and tallies them by the
/// conjugacy class of their stabiliser. One entry per class of the lattice,
/// in class order. Throws BudgetExceeded when q^|G| > budget and
/// DivisibilityViolation if an orbit size disagrees with its stabiliser.
std::vector<ClassCensus> brute_orbit_census(const SubgroupLattice& lattice, std::uint64_t q,
                                            const OracleOptions& options = {});

/// Burnside count (1/|G|) sum_g q^{cycles(pi_g)}.
BigInt burnside_orbit_count(const FiniteGroup& g, std::uint64_t q);

/// Number of configurations x with H <= G_x, by enumerating all of A^G.
BigInt brute_fix_count(const FiniteGroup& g, const Subgroup& h, std::uint64_t q,
                       const OracleOptions& options = {});

}  // namespace periodica
