#include "periodica/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "periodica/error.hpp"
#include "periodica/number_theory.hpp"

namespace periodica {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Element> table, std::string label)
    : order_(n), table_(std::move(table)), inverse_(n, 0), label_(std::move(label)) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

FiniteGroup make_group_unchecked(std::size_t n, std::vector<Element> table,
                                 std::string label) {
  return FiniteGroup(n, std::move(table), std::move(label));
}

Element FiniteGroup::power(Element a, std::uint64_t e) const {
  Element result = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return out;
}

ElementSet FiniteGroup::all_elements() const {
  ElementSet s(order_);
  for (Element a = 0; a < order_; ++a) s.insert(a);
  return s;
}

FiniteGroup group_from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                                    std::string label,
                                    std::size_t associativity_bound) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cayley table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorCode::NotLatinSquare,
                  "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto v = table[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorCode::NotLatinSquare, "entry (" + std::to_string(r) + ", " +
                                                   std::to_string(c) + ") = " +
                                                   std::to_string(v) + " out of range");
      }
    }
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = static_cast<std::size_t>(table[r][c]);
      if (seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "row " + std::to_string(r) + " repeats " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      auto v = static_cast<std::size_t>(table[r][c]);
      if (seen[v]) {
        throw Error(ErrorCode::NotLatinSquare,
                    "column " + std::to_string(c) + " repeats " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) {
      ok = table[e][g] == static_cast<std::int64_t>(g) &&
           table[g][e] == static_cast<std::int64_t>(g);
    }
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");
  const auto e = static_cast<std::int64_t>(*identity);

  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] == e) {
        if (table[h][g] != e) {
          throw Error(ErrorCode::NoInverse,
                      "element " + std::to_string(g) + " has right inverse " +
                          std::to_string(h) + " that is not a left inverse");
        }
        break;
      }
    }
  }

  if (n <= associativity_bound) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = static_cast<std::size_t>(table[a][b]);
        for (std::size_t c = 0; c < n; ++c) {
          auto bc = static_cast<std::size_t>(table[b][c]);
          if (table[ab][c] != table[a][bc]) {
            throw Error(ErrorCode::NotAssociative,
                        "(ab)c != a(bc) for (a, b, c) = " +
                            triple(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                   static_cast<std::int64_t>(c)));
          }
        }
      }
    }
  }

  // identity first, the rest keep their relative order
  std::vector<std::size_t> to_new(n);
  std::vector<std::size_t> to_old;
  to_old.reserve(n);
  to_old.push_back(*identity);
  for (std::size_t g = 0; g < n; ++g) {
    if (g != *identity) to_old.push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i) to_new[to_old[i]] = i;

  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = static_cast<Element>(
          to_new[static_cast<std::size_t>(table[to_old[a]][to_old[b]])]);
    }
  }
  return make_group_unchecked(n, std::move(flat), std::move(label));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

PermutationClosure permutation_closure(std::span<const Permutation> generators,
                                       std::size_t degree, std::size_t max_order) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    std::vector<char> hit(degree, 0);
    bool ok = p.size() == degree;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      ok = p[i] < degree && !hit[p[i]];
      if (ok) hit[p[i]] = 1;
    }
    if (!ok) {
      throw Error(ErrorCode::InvalidInput,
                  "generator " + std::to_string(k) + " is not a permutation of 0.." +
                      std::to_string(degree == 0 ? 0 : degree - 1));
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      auto y = compose(elements[i], s);
      if (index.emplace(y, static_cast<Element>(elements.size())).second) {
        elements.push_back(std::move(y));
        if (elements.size() > max_order) {
          throw Error(ErrorCode::OrderLimitExceeded,
                      "permutation group order exceeds limit " + std::to_string(max_order));
        }
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return {make_group_unchecked(n, std::move(flat), {}), std::move(elements)};
}

FiniteGroup group_from_permutations(std::span<const Permutation> generators,
                                    std::size_t degree, std::string label,
                                    std::size_t max_order) {
  auto closure = permutation_closure(generators, degree, max_order);
  closure.group.set_label(std::move(label));
  return std::move(closure.group);
}

FiniteGroup cyclic_group(std::size_t n) {
  const std::uint64_t m = n;
  return direct_sum_of_cyclics(std::span<const std::uint64_t>(&m, 1), n);
}

FiniteGroup direct_sum_of_cyclics(std::span<const std::uint64_t> moduli,
                                  std::size_t max_order) {
  std::vector<std::uint64_t> mods;
  std::uint64_t n = 1;
  for (auto m : moduli) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "cyclic factor of order 0");
    if (m == 1) continue;
    if (n > max_order / m) {
      throw Error(ErrorCode::OrderLimitExceeded,
                  "direct sum order exceeds limit " + std::to_string(max_order));
    }
    n *= m;
    mods.push_back(m);
  }
  std::string label;
  for (auto m : mods) label += (label.empty() ? "Z" : "xZ") + std::to_string(m);
  if (label.empty()) label = "1";

  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint64_t> d(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      d[i] = x % mods[i];
      x /= mods[i];
    }
    return d;
  };
  std::vector<Element> flat(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    auto da = digits(a);
    for (std::uint64_t b = 0; b < n; ++b) {
      auto db = digits(b);
      std::uint64_t c = 0;
      for (std::size_t i = mods.size(); i-- > 0;) c = c * mods[i] + (da[i] + db[i]) % mods[i];
      flat[a * n + b] = static_cast<Element>(c);
    }
  }
  return make_group_unchecked(n, std::move(flat), std::move(label));
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (members.universe() != g.order() || !members.contains(0)) return false;
  auto elems = members.elements();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!members.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(const FiniteGroup& g, ElementSet members) {
  if (!is_subgroup(g, members)) {
    throw Error(ErrorCode::NotSubgroup, "element set is not closed under multiplication");
  }
  parent_order_ = g.order();
  elements_ = members.elements();
  mask_ = std::move(members);
}

Subgroup make_subgroup_unchecked(std::size_t parent_order, ElementSet members) {
  Subgroup s;
  s.parent_order_ = parent_order;
  s.elements_ = members.elements();
  s.mask_ = std::move(members);
  return s;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  ElementSet s(g.order());
  s.insert(0);
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto gen : generators) {
      auto y = g.mul(x, gen);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  }
  return make_subgroup_unchecked(g.order(), std::move(s));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(0);
  return make_subgroup_unchecked(g.order(), std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) {
  return make_subgroup_unchecked(g.order(), g.all_elements());
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& h, Element by) {
  ElementSet out(g.order());
  for (auto x : h.elements()) out.insert(g.conjugate(x, by));
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  ElementSet n(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    if (conjugate_set(g, h.mask(), x) == h.mask()) n.insert(x);
  }
  return make_subgroup_unchecked(g.order(), std::move(n));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    for (auto y : h.elements()) {
      if (!h.contains(g.conjugate(y, x))) return false;
    }
  }
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> commutators;
  ElementSet seen(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      auto c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen.contains(c)) {
        seen.insert(c);
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(g, commutators);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label) {
  const auto& members = h.elements();
  const std::size_t n = members.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = local[g.mul(members[a], members[b])];
    }
  }
  return make_group_unchecked(n, std::move(flat), std::move(label));
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, std::string label) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(g.order(), unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != unassigned) continue;
    for (auto y : n.elements()) coset[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t m = reps.size();
  std::vector<Element> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      flat[a * m + b] = static_cast<Element>(coset[g.mul(reps[a], reps[b])]);
    }
  }
  return make_group_unchecked(m, std::move(flat), std::move(label));
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::InvalidInput, "group is not abelian");
  const std::uint64_t n = g.order();
  // per prime: exponents of the cyclic p-factors, largest first
  std::vector<std::vector<std::uint64_t>> prime_powers;
  for (auto [p, e] : factorize(n)) {
    std::vector<std::uint64_t> at_least;  // at_least[k-1] = #factors of order >= p^k
    std::uint64_t prev_rank = 0;
    std::uint64_t pk = 1;
    for (std::uint64_t k = 1; k <= e; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (Element a = 0; a < n; ++a) {
        if (g.power(a, pk) == 0) ++count;
      }
      std::uint64_t rank = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++rank;
      at_least.push_back(rank - prev_rank);
      prev_rank = rank;
    }
    // factor i (0-based, largest first) has order p^{#k with at_least[k-1] > i}
    std::vector<std::uint64_t> factors;
    for (std::uint64_t i = 0; !at_least.empty() && i < at_least.front(); ++i) {
      std::uint64_t q = 1;
      for (auto c : at_least) {
        if (c > i) q *= p;
      }
      factors.push_back(q);
    }
    prime_powers.push_back(std::move(factors));
  }
  std::size_t width = 0;
  for (const auto& f : prime_powers) width = std::max(width, f.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto& f : prime_powers) {
    for (std::size_t i = 0; i < f.size(); ++i) invariants[width - 1 - i] *= f[i];
  }
  return invariants;
}

std::string GroupFingerprint::name() const {
  auto abelian_name = [](const std::vector<std::uint64_t>& inv) {
    std::string s;
    for (auto d : inv) s += (s.empty() ? "Z" : "xZ") + std::to_string(d);
    return s.empty() ? std::string("1") : s;
  };
  if (abelian) return abelian_name(abelianization);
  return "nonabelian(order " + std::to_string(order) + ", ab " +
         abelian_name(abelianization) + ")";
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  fp.abelianization = abelian_invariants(quotient(g, commutator_subgroup(g)));
  return fp;
}

}  // namespace periodica
