#include "periodica/shift_oracle.hpp"

#include <algorithm>
#include <future>

#include "periodica/error.hpp"

namespace periodica {

namespace {

// q^e as a 64-bit value when it is at most budget
std::uint64_t checked_space(std::uint64_t q, std::uint64_t e, std::uint64_t budget,
                            const char* what) {
  BigInt size = big_pow(q, e);
  if (size > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " needs " + to_string(size) +
                                               " configurations, budget is " +
                                               std::to_string(budget));
  }
  return static_cast<std::uint64_t>(size);
}

// Runs body(begin, end) over [0, total) in `jobs` contiguous chunks and sums
// the results.
template <typename Body>
std::uint64_t chunked_sum(std::uint64_t total, unsigned jobs, Body body) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(total, 1));
  if (workers == 1) return body(std::uint64_t{0}, total);
  std::vector<std::future<std::uint64_t>> parts;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::uint64_t begin = 0; begin < total; begin += step) {
    const std::uint64_t end = std::min(total, begin + step);
    parts.push_back(std::async(std::launch::async, body, begin, end));
  }
  std::uint64_t sum = 0;
  for (auto& p : parts) sum += p.get();
  return sum;
}

}  // namespace

std::uint64_t Configuration::encode() const {
  std::uint64_t code = 0;
  for (std::size_t i = letters.size(); i-- > 0;) code = code * q + letters[i];
  return code;
}

Configuration Configuration::decode(std::uint64_t code, std::size_t n, std::uint64_t q) {
  Configuration x;
  x.q = q;
  x.letters.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.letters[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return x;
}

ShiftTables::ShiftTables(const FiniteGroup& g) : group_(&g) {}

std::size_t ShiftTables::cycle_count(Element g) const {
  return group_->order() / group_->element_order(g);
}

Configuration shift(const Configuration& x, Element g, const ShiftTables& tables) {
  Configuration y = x;
  for (Element h = 0; h < x.letters.size(); ++h) y.letters[tables.position(g, h)] = x.letters[h];
  return y;
}

Subgroup stabilizer(const Configuration& x, const ShiftTables& tables) {
  const auto& g = tables.group();
  ElementSet members(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool fixed = true;
    for (Element h = 0; h < g.order() && fixed; ++h) {
      fixed = x.letters[tables.position(a, h)] == x.letters[h];
    }
    if (fixed) members.insert(a);
  }
  return Subgroup(g, std::move(members));
}

BigInt brute_psi(const FiniteGroup& g, const Subgroup& h, std::uint64_t q,
                 const OracleOptions& options) {
  if (q < 2) throw Error(ErrorCode::AlphabetTooSmall, "alphabet size below 2");
  const std::size_t n = g.order();
  // right cosets Hg
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(n, unassigned);
  std::size_t cosets = 0;
  for (Element a = 0; a < n; ++a) {
    if (coset[a] != unassigned) continue;
    for (auto x : h.elements()) coset[g.mul(x, a)] = cosets;
    ++cosets;
  }
  const auto total = checked_space(q, cosets, options.budget, "brute_psi");

  // G_x strictly contains H exactly when some a outside H fixes x, and then
  // so does one a' with <H, a'> minimal among such overgroups. Testing one
  // element per minimal overgroup is therefore enough.
  std::vector<Element> witnesses;
  {
    std::vector<Subgroup> over;
    std::vector<Element> rep;
    for (Element a = 0; a < n; ++a) {
      if (h.contains(a)) continue;
      auto gens = h.elements();
      gens.push_back(a);
      auto k = generated_subgroup(g, gens);
      if (std::find(over.begin(), over.end(), k) != over.end()) continue;
      over.push_back(std::move(k));
      rep.push_back(a);
    }
    for (std::size_t i = 0; i < over.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < over.size() && minimal; ++j) {
        minimal = j == i || !over[j].mask().is_subset_of(over[i].mask());
      }
      if (minimal) witnesses.push_back(rep[i]);
    }
  }

  auto body = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::uint32_t> labels(cosets);
    std::uint64_t c = begin;
    for (auto& l : labels) {
      l = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    std::vector<std::uint32_t> x(n);
    std::uint64_t count = 0;
    for (std::uint64_t code = begin; code < end; ++code) {
      for (Element a = 0; a < n; ++a) x[a] = labels[coset[a]];
      bool exact = true;
      for (auto a : witnesses) {
        bool fixed = true;
        for (Element b = 0; b < n && fixed; ++b) fixed = x[g.mul(a, b)] == x[b];
        if (fixed) {
          exact = false;
          break;
        }
      }
      if (exact) ++count;
      for (auto& l : labels) {
        if (++l < q) break;
        l = 0;
      }
    }
    return count;
  };
  return chunked_sum(total, options.jobs, body);
}

std::vector<ClassCensus> brute_orbit_census(const SubgroupLattice& lattice, std::uint64_t q,
                                            const OracleOptions& options) {
  if (q < 2) throw Error(ErrorCode::AlphabetTooSmall, "alphabet size below 2");
  const auto& g = lattice.group();
  const std::size_t n = g.order();
  const auto total = checked_space(q, n, options.budget, "brute_orbit_census");

  std::vector<std::uint64_t> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = i == 0 ? 1 : weight[i - 1] * q;

  std::vector<ClassCensus> census(lattice.class_count());
  for (std::size_t c = 0; c < census.size(); ++c) census[c] = {c, 0, 0};

  std::vector<bool> visited(total, false);
  std::vector<std::uint64_t> orbit(n);
  std::vector<std::uint32_t> x(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    std::uint64_t c = code;
    for (auto& l : x) {
      l = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    ElementSet stab(n);
    for (Element a = 0; a < n; ++a) {
      std::uint64_t image = 0;
      for (Element b = 0; b < n; ++b) image += x[b] * weight[g.mul(a, b)];
      orbit[a] = image;
      visited[image] = true;
      if (image == code) stab.insert(a);
    }
    std::sort(orbit.begin(), orbit.end());
    const auto size = static_cast<std::size_t>(std::unique(orbit.begin(), orbit.end()) - orbit.begin());
    auto id = lattice.find(stab);
    if (!id) throw Error(ErrorCode::DivisibilityViolation, "stabiliser is not a subgroup");
    if (size * lattice[*id].order() != n) {
      throw Error(ErrorCode::DivisibilityViolation,
                  "orbit of size " + std::to_string(size) + " has stabiliser of index " +
                      std::to_string(lattice[*id].index()));
    }
    auto& entry = census[lattice.class_of(*id)];
    entry.psi_class += size;
    entry.alpha += 1;
  }
  return census;
}

BigInt burnside_orbit_count(const FiniteGroup& g, std::uint64_t q) {
  ShiftTables tables(g);
  BigInt sum = 0;
  for (Element a = 0; a < g.order(); ++a) sum += big_pow(q, tables.cycle_count(a));
  if (sum % g.order() != 0) {
    throw Error(ErrorCode::DivisibilityViolation, "Burnside sum not divisible by |G|");
  }
  return sum / g.order();
}

BigInt brute_fix_count(const FiniteGroup& g, const Subgroup& h, std::uint64_t q,
                       const OracleOptions& options) {
  const std::size_t n = g.order();
  const auto total = checked_space(q, n, options.budget, "brute_fix_count");
  auto body = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::uint32_t> x(n);
    std::uint64_t count = 0;
    for (std::uint64_t code = begin; code < end; ++code) {
      std::uint64_t c = code;
      for (auto& l : x) {
        l = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      bool periodic = true;
      for (auto a : h.elements()) {
        for (Element b = 0; b < n && periodic; ++b) periodic = x[g.mul(a, b)] == x[b];
        if (!periodic) break;
      }
      if (periodic) ++count;
    }
    return count;
  };
  return chunked_sum(total, options.jobs, body);
}

}  // namespace periodica
