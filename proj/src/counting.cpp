#include "periodica/counting.hpp"

#include "periodica/error.hpp"
#include "periodica/number_theory.hpp"

namespace periodica {

namespace {

void require_alphabet(std::uint64_t q) {
  if (q < 2) {
    throw Error(ErrorCode::AlphabetTooSmall,
                "alphabet size " + std::to_string(q) + " is below 2");
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

BigInt fix_count(std::uint64_t index, std::uint64_t q) {
  if (index > kMaxIndex) {
    throw Error(ErrorCode::IndexLimitExceeded,
                "index " + std::to_string(index) + " exceeds " + std::to_string(kMaxIndex));
  }
  return big_pow(q, index);
}

BigInt psi_value(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q) {
  require_alphabet(q);
  BigInt total = 0;
  for (auto k : lattice.supergroups(h)) {
    auto mu = lattice.mobius(h, k);
    if (mu != 0) total += mu * fix_count(lattice[k].index(), q);
  }
  return total;
}

CountReport psi(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q) {
  require_alphabet(q);
  CountReport report;
  report.group_label = lattice.group().label();
  report.subgroup_members = lattice[h].elements();
  report.q = q;
  report.index = lattice[h].index();
  report.class_size = lattice.conjugacy_class_of(h).size();
  report.psi = 0;
  for (auto k : lattice.supergroups(h)) {
    CountTerm term{lattice[k].elements(), lattice.mobius(h, k), lattice[k].index()};
    if (term.mu != 0) report.psi += term.mu * fix_count(term.index, q);
    report.terms.push_back(std::move(term));
  }
  return alpha_from_psi(std::move(report));
}

CountReport psi(const SubgroupLattice& lattice, const Subgroup& h, std::uint64_t q) {
  return psi(lattice, lattice.id_of(h), q);
}

BigInt psi_chain(std::uint64_t index_h, std::uint64_t index_h1, std::uint64_t q) {
  require_alphabet(q);
  if (index_h1 < 1 || index_h1 >= index_h || index_h % index_h1 != 0) {
    throw Error(ErrorCode::InvalidInput,
                "chain formula needs index_h1 to be a proper divisor of index_h, got " +
                    std::to_string(index_h) + " and " + std::to_string(index_h1));
  }
  return fix_count(index_h, q) - fix_count(index_h1, q);
}

BigInt psi_chain_checked(const SubgroupLattice& lattice, SubgroupId h, std::uint64_t q) {
  const auto& above = lattice.supergroups(h);
  if (above.size() < 2) throw Error(ErrorCode::NotAChain, "interval [H, G] has length 0");
  for (std::size_t i = 1; i < above.size(); ++i) {
    if (!lattice.leq(above[i - 1], above[i])) {
      throw Error(ErrorCode::NotAChain, "interval [H, G] is not totally ordered");
    }
  }
  return psi_chain(lattice[h].index(), lattice[above[1]].index(), q);
}

CountReport psi_normal(const FiniteGroup& quotient, std::uint64_t q,
                       std::size_t lattice_limit) {
  auto lattice = all_subgroups(quotient, lattice_limit);
  return psi(lattice, lattice.trivial(), q);
}

BigInt psi_cyclic(std::uint64_t n, std::uint64_t q) {
  require_alphabet(q);
  if (n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  BigInt total = 0;
  for (auto d : divisors(n)) {
    int mu = mobius_number(d);
    if (mu != 0) total += mu * fix_count(n / d, q);
  }
  return total;
}

BigInt psi_prime_power(std::uint64_t p, std::uint64_t k, std::uint64_t q) {
  require_prime(p);
  require_alphabet(q);
  if (k == 0) throw Error(ErrorCode::InvalidInput, "exponent must be positive");
  std::uint64_t pk1 = 1;
  for (std::uint64_t i = 1; i < k; ++i) {
    if (pk1 > kMaxIndex) break;
    pk1 *= p;
  }
  if (pk1 > kMaxIndex / p) {
    throw Error(ErrorCode::IndexLimitExceeded, "p^k exceeds " + std::to_string(kMaxIndex));
  }
  return fix_count(pk1 * p, q) - fix_count(pk1, q);
}

BigInt psi_elementary_p2(std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_alphabet(q);
  if (p > kMaxIndex / p) {
    throw Error(ErrorCode::IndexLimitExceeded, "p^2 exceeds " + std::to_string(kMaxIndex));
  }
  return fix_count(p * p, q) - BigInt(p + 1) * fix_count(p, q) + BigInt(p) * BigInt(q);
}

CountReport alpha_from_psi(CountReport report) {
  report.psi_class = BigInt(report.class_size) * report.psi;
  if (report.index == 0 || report.psi_class % report.index != 0) {
    throw Error(ErrorCode::DivisibilityViolation,
                "|[H]| * psi = " + to_string(report.psi_class) + " is not divisible by [G:H] = " +
                    std::to_string(report.index));
  }
  report.alpha = report.psi_class / report.index;
  return report;
}

AutDescription aut_structure(const SubgroupLattice& lattice, std::uint64_t q) {
  require_alphabet(q);
  const auto& g = lattice.group();
  AutDescription out;
  out.group_label = g.label();
  out.q = q;
  for (std::size_t c = 0; c < lattice.class_count(); ++c) {
    const auto rep = lattice.conjugacy_class(c).front();
    const auto& h = lattice[rep];
    auto n = subgroup_as_group(g, lattice[lattice.normalizer(rep)]);
    // h sits inside the normalizer; find its image there
    const auto& norm_members = lattice[lattice.normalizer(rep)].elements();
    ElementSet local(n.order());
    for (std::size_t i = 0; i < norm_members.size(); ++i) {
      if (h.contains(norm_members[i])) local.insert(static_cast<Element>(i));
    }
    auto factor_group = quotient(n, make_subgroup_unchecked(n.order(), std::move(local)));

    BigInt psi_h = psi_value(lattice, rep, q);
    CountReport r;
    r.psi = psi_h;
    r.class_size = lattice.conjugacy_class(c).size();
    r.index = h.index();
    r = alpha_from_psi(std::move(r));
    out.factors.push_back({c, rep, h.index(), fingerprint(factor_group), std::move(r.alpha)});
  }
  return out;
}

}  // namespace periodica
