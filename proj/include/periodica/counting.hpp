#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "periodica/bigint.hpp"
#include "periodica/finite_group.hpp"
#include "periodica/subgroup_lattice.hpp"

namespace periodica {

/// Largest index [G:K] for which q^[G:K] is evaluated.
inline constexpr std::uint64_t kMaxIndex = 4096;

/// Number of H-periodic configurations, q^index. Throws IndexLimitExceeded
/// past kMaxIndex.
BigInt fix_count(std::uint64_t index, std::uint64_t q);

struct CountTerm {
  std::vector<Element> subgroup_members;  // K
  BigInt mu;                              // mu(H, K)
  std::uint64_t index = 0;                // [G:K]
};

/// Counts of configurations with least period H (and its conjugacy class).
struct CountReport {
  std::string group_label;
  std::vector<Element> subgroup_members;
  std::uint64_t q = 0;
  std::uint64_t index = 0;       // [G:H]
  std::uint64_t class_size = 0;  // |[H]|
  BigInt psi;                    // configurations with stabiliser exactly H
  BigInt psi_class;              // stabiliser conjugate to H
  BigInt alpha;                  // orbits with stabiliser conjugate to H
  std::vector<CountTerm> terms;  // one per K in [H, G], canonical order
};

/// psi_H = sum over H <= K <= G of mu(H,K) q^[G:K], with the expanded terms.
/// Throws AlphabetTooSmall for q < 2.
CountReport psi(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q);
CountReport psi(const SubgroupLattice& lattice, const Subgroup& h, std::uint64_t q);

/// Just the psi value, without building a report.
BigInt psi_value(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q);

/// q^[G:H] - q^[G:H_1] for an interval [H, G] that is a chain with H_1
/// covering H. Requires 1 <= index_h1 < index_h.
BigInt psi_chain(std::uint64_t index_h, std::uint64_t index_h1, std::uint64_t q);

/// Same, after checking against the lattice that [H, G] is a chain of
/// length >= 1. Throws NotAChain otherwise.
BigInt psi_chain_checked(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q);

/// Report for the trivial subgroup of a quotient G/H, which by the normal
/// reduction equals the report for H in G.
CountReport psi_normal(const FiniteGroup& quotient, std::uint64_t q,
                       std::size_t lattice_limit = kDefaultLatticeLimit);

/// sum over d | n of mobius(d) q^(n/d).
BigInt psi_cyclic(std::uint64_t n, std::uint64_t q);

/// q^(p^k) - q^(p^(k-1)). Throws NotPrime.
BigInt psi_prime_power(std::uint64_t p, std::uint64_t k, std::uint64_t q);

/// q^(p^2) - (p+1) q^p + p q. Throws NotPrime.
BigInt psi_elementary_p2(std::uint64_t p, std::uint64_t q);

/// Fills psi_class and alpha from psi, class_size and index. Throws
/// DivisibilityViolation if class_size * psi is not a multiple of index.
CountReport alpha_from_psi(CountReport report);

struct AutFactor {
  std::size_t class_index = 0;
  SubgroupId representative = 0;
  std::uint64_t index = 0;    // [G:H_i]
  GroupFingerprint quotient;  // N_G(H_i)/H_i
  BigInt alpha;
};

/// Factor list of the automorphism group of the full shift over a finite
/// group: one (N_G(H_i)/H_i, alpha_i) per conjugacy class of subgroups.
struct AutDescription {
  std::string group_label;
  std::uint64_t q = 0;
  std::vector<AutFactor> factors;
};

AutDescription aut_structure(const SubgroupLattice& lattice, std::uint64_t q);

}  // namespace periodica
