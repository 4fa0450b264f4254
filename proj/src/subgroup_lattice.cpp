#include "periodica/subgroup_lattice.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "periodica/error.hpp"

namespace periodica {

struct SubgroupLattice::MobiusCache {
  std::mutex mutex;
  std::unordered_map<SubgroupId, std::vector<BigInt>> rows;
};

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const Subgroup& h) const {
  auto id = find(h.mask());
  if (!id) throw Error(ErrorCode::NotSubgroup, "subgroup is not in the lattice");
  return *id;
}

bool SubgroupLattice::leq(SubgroupId a, SubgroupId b) const {
  return subgroups_[a].mask().is_subset_of(subgroups_[b].mask());
}

SubgroupId SubgroupLattice::meet(SubgroupId a, SubgroupId b) const {
  return lookup_.at(subgroups_[a].mask().intersection(subgroups_[b].mask()));
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  // smallest common supergroup; supergroups_ is sorted by order
  for (auto k : supergroups_[a]) {
    if (leq(b, k)) return k;
  }
  return top();
}

std::vector<SubgroupId> SubgroupLattice::interval(SubgroupId h, SubgroupId k) const {
  if (!leq(h, k)) {
    throw Error(ErrorCode::NotComparable,
                "subgroup " + std::to_string(h) + " is not contained in " + std::to_string(k));
  }
  std::vector<SubgroupId> out;
  for (auto j : supergroups_[h]) {
    if (leq(j, k)) out.push_back(j);
  }
  return out;
}

const std::vector<BigInt>& SubgroupLattice::mobius_row(SubgroupId h) const {
  {
    std::lock_guard lock(mobius_cache_->mutex);
    auto it = mobius_cache_->rows.find(h);
    if (it != mobius_cache_->rows.end()) return it->second;
  }
  // mu(h, J) for J = supergroups_[h][i]; canonical order lists every proper
  // subgroup of J before J itself.
  const auto& above = supergroups_[h];
  std::vector<BigInt> row(above.size());
  for (std::size_t i = 0; i < above.size(); ++i) {
    if (i == 0) {
      row[i] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (leq(above[j], above[i])) sum += row[j];
    }
    row[i] = -sum;
  }
  std::lock_guard lock(mobius_cache_->mutex);
  // unordered_map references stay valid across rehashing
  return mobius_cache_->rows.emplace(h, std::move(row)).first->second;
}

BigInt SubgroupLattice::mobius(SubgroupId h, SubgroupId k) const {
  if (!leq(h, k)) return 0;
  const auto& above = supergroups_[h];
  auto pos = std::lower_bound(above.begin(), above.end(), k);
  return mobius_row(h)[static_cast<std::size_t>(pos - above.begin())];
}

SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t lattice_limit) {
  if (g.order() > lattice_limit) {
    throw Error(ErrorCode::LatticeLimitExceeded,
                "group order " + std::to_string(g.order()) + " exceeds lattice limit " +
                    std::to_string(lattice_limit));
  }
  struct Found {
    Subgroup subgroup;
    std::vector<Element> generators;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  std::vector<std::size_t> cyclic;  // indices into found
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> gens;
    if (x != 0) gens.push_back(x);
    auto c = generated_subgroup(g, gens);
    if (seen.emplace(c.mask(), found.size()).second) {
      cyclic.push_back(found.size());
      found.push_back({std::move(c), std::move(gens)});
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto c : cyclic) {
      if (found[c].subgroup.mask().is_subset_of(found[i].subgroup.mask())) continue;
      auto gens = found[i].generators;
      gens.insert(gens.end(), found[c].generators.begin(), found[c].generators.end());
      auto j = generated_subgroup(g, gens);
      if (seen.emplace(j.mask(), found.size()).second) {
        found.push_back({std::move(j), std::move(gens)});
      }
    }
  }

  SubgroupLattice lattice(g);
  lattice.mobius_cache_ = std::make_shared<SubgroupLattice::MobiusCache>();
  for (auto& f : found) lattice.subgroups_.push_back(std::move(f.subgroup));
  std::sort(lattice.subgroups_.begin(), lattice.subgroups_.end(), canonical_less);
  const std::size_t n = lattice.subgroups_.size();
  for (SubgroupId i = 0; i < n; ++i) lattice.lookup_.emplace(lattice.subgroups_[i].mask(), i);

  lattice.supergroups_.resize(n);
  lattice.subgroups_below_.resize(n);
  for (SubgroupId i = 0; i < n; ++i) {
    for (SubgroupId j = i; j < n; ++j) {
      const auto& a = lattice.subgroups_[i];
      const auto& b = lattice.subgroups_[j];
      if (b.order() % a.order() == 0 && a.mask().is_subset_of(b.mask())) {
        lattice.supergroups_[i].push_back(j);
        lattice.subgroups_below_[j].push_back(i);
      }
    }
  }

  constexpr auto unassigned = static_cast<std::size_t>(-1);
  lattice.class_of_.assign(n, unassigned);
  lattice.normalizer_.assign(n, 0);
  for (SubgroupId i = 0; i < n; ++i) {
    const auto& h = lattice.subgroups_[i];
    ElementSet norm(g.order());
    std::vector<SubgroupId> conjugates;
    for (Element x = 0; x < g.order(); ++x) {
      auto j = lattice.lookup_.at(conjugate_set(g, h.mask(), x));
      if (j == i) norm.insert(x);
      conjugates.push_back(j);
    }
    lattice.normalizer_[i] = lattice.lookup_.at(norm);
    if (lattice.class_of_[i] != unassigned) continue;
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    for (auto j : conjugates) lattice.class_of_[j] = lattice.classes_.size();
    lattice.classes_.push_back(std::move(conjugates));
  }
  return lattice;
}

}  // namespace periodica
