#include "periodica/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

#include "periodica/counting.hpp"
#include "periodica/error.hpp"
#include "periodica/number_theory.hpp"

namespace periodica {

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {
      "mobius-sums",  "lattice-closure", "lagrange",        "mobius-conjugation",
      "inversion",    "partition",       "psi-conjugation", "closed-forms",
      "chain",        "aperiodic-bound", "oracle",          "fix-counts",
      "fix-monotonicity", "census",      "burnside",        "action-axioms",
      "stabilizer-conjugation"};
  return names;
}

namespace {

std::string members(const Subgroup& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    out += (i ? "," : "") + std::to_string(h.elements()[i]);
  }
  return out + "}";
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Records one case; keeps the first failure only.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.status != CheckStatus::Fail) {
      result_.status = CheckStatus::Fail;
      result_.detail = describe();
    }
  }
  void skip(std::string why) {
    if (result_.status == CheckStatus::Pass && result_.cases == 0) {
      result_.status = CheckStatus::Skip;
      result_.detail = std::move(why);
    }
  }
  // A skip recorded for one q is cleared once another q produces cases.
  CheckResult finish() {
    if (result_.status == CheckStatus::Skip && result_.cases > 0) {
      result_.status = CheckStatus::Pass;
      result_.detail.clear();
    }
    return result_;
  }

 private:
  CheckResult result_;
};

// q^n when it is at most `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > limit / q) return std::nullopt;
    v *= q;
  }
  return v;
}

// Deterministic sample configurations for the action checks.
std::vector<Configuration> sample_configurations(std::size_t n, std::uint64_t q) {
  std::vector<Configuration> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    Configuration x{std::vector<std::uint32_t>(n), q};
    for (std::size_t h = 0; h < n; ++h) {
      x.letters[h] = static_cast<std::uint32_t>((h * 7 + i * 13 + h * h * i + (i >> 2) * h) % q);
    }
    out.push_back(std::move(x));
  }
  return out;
}

struct Verifier {
  const SubgroupLattice& lattice;
  const FiniteGroup& g;
  const VerifyOptions& options;

  bool wanted(const std::string& name) const {
    return options.checks.empty() ||
           std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end();
  }

  CheckResult mobius_sums() {
    Check c("mobius-sums");
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      for (SubgroupId k : lattice.supergroups(h)) {
        if (k == h) continue;
        BigInt sum = 0;
        for (SubgroupId j : lattice.interval(h, k)) sum += lattice.mobius(h, j);
        c.expect(sum == 0, [&] {
          return "sum of mu over [" + members(lattice[h]) + ", " + members(lattice[k]) +
                 "] is " + to_string(sum);
        });
      }
    }
    return c.finish();
  }

  CheckResult lattice_closure() {
    Check c("lattice-closure");
    for (SubgroupId a = 0; a < lattice.size(); ++a) {
      for (SubgroupId b = a; b < lattice.size(); ++b) {
        auto both = lattice[a].mask().intersection(lattice[b].mask());
        auto meet = lattice.find(both);
        c.expect(meet && *meet == lattice.meet(a, b), [&] {
          return "intersection of " + members(lattice[a]) + " and " + members(lattice[b]);
        });
        std::vector<Element> gens = lattice[a].elements();
        gens.insert(gens.end(), lattice[b].elements().begin(), lattice[b].elements().end());
        auto joined = lattice.find(generated_subgroup(g, gens).mask());
        c.expect(joined && *joined == lattice.join(a, b), [&] {
          return "join of " + members(lattice[a]) + " and " + members(lattice[b]);
        });
      }
    }
    return c.finish();
  }

  CheckResult lagrange() {
    Check c("lagrange");
    for (const auto& h : lattice.subgroups()) {
      c.expect(g.order() % h.order() == 0, [&] { return "order of " + members(h); });
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k < lattice.class_count(); ++k) {
      const auto& cls = lattice.conjugacy_class(k);
      total += cls.size();
      // the class is exactly the set of conjugates of its first member
      std::vector<SubgroupId> conjugates;
      for (Element x = 0; x < g.order(); ++x) {
        auto id = lattice.find(conjugate_set(g, lattice[cls.front()].mask(), x));
        if (id) conjugates.push_back(*id);
      }
      std::sort(conjugates.begin(), conjugates.end());
      conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
      auto sorted = cls;
      std::sort(sorted.begin(), sorted.end());
      c.expect(sorted == conjugates, [&] { return "class of " + members(lattice[cls.front()]); });
      c.expect(cls.size() == lattice[lattice.normalizer(cls.front())].index(),
               [&] { return "class size of " + members(lattice[cls.front()]); });
    }
    c.expect(total == lattice.size(), [&] { return "class sizes do not add up"; });
    return c.finish();
  }

  CheckResult mobius_conjugation() {
    Check c("mobius-conjugation");
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      for (Element x = 0; x < g.order(); ++x) {
        auto id = lattice.find(conjugate_set(g, lattice[h].mask(), x));
        c.expect(id && lattice.mobius(*id, lattice.top()) == lattice.mobius(h, lattice.top()),
                 [&] { return "conjugating " + members(lattice[h]) + " by " + std::to_string(x); });
      }
    }
    return c.finish();
  }

  void inversion(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      BigInt sum = 0;
      for (SubgroupId k : lattice.supergroups(h)) sum += psi[k];
      c.expect(sum == fix_count(lattice[h].index(), q), [&] {
        return "q=" + std::to_string(q) + " H=" + members(lattice[h]) + ": sum " + to_string(sum);
      });
    }
  }

  void partition(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    BigInt sum = 0;
    for (std::size_t k = 0; k < lattice.class_count(); ++k) {
      const auto& cls = lattice.conjugacy_class(k);
      sum += psi[cls.front()] * cls.size();
    }
    c.expect(sum == fix_count(g.order(), q),
             [&] { return "q=" + std::to_string(q) + ": classes sum to " + to_string(sum); });
  }

  void psi_conjugation(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      for (Element x = 0; x < g.order(); ++x) {
        auto id = lattice.find(conjugate_set(g, lattice[h].mask(), x));
        c.expect(id && psi[*id] == psi[h], [&] {
          return "q=" + std::to_string(q) + " H=" + members(lattice[h]) + " by " + std::to_string(x);
        });
      }
    }
  }

  void closed_forms(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    const auto n = g.order();
    const bool abelian = g.is_abelian();
    const auto inv = abelian ? abelian_invariants(g) : std::vector<std::uint64_t>{};
    const BigInt& aperiodic = psi[lattice.trivial()];
    auto tag = [&](const std::string& what) {
      return [=] { return what + " disagrees at q=" + std::to_string(q); };
    };
    if (abelian && inv.size() <= 1) {
      c.expect(psi_cyclic(n, q) == aperiodic, tag("psi_cyclic"));
      auto f = n > 1 ? factorize(n) : decltype(factorize(2)){};
      if (f.size() == 1) c.expect(psi_prime_power(f[0].first, f[0].second, q) == aperiodic, tag("psi_prime_power"));
    }
    if (abelian && inv.size() == 2 && inv[0] == inv[1] && is_prime(inv[0])) {
      c.expect(psi_elementary_p2(inv[0], q) == aperiodic, tag("psi_elementary_p2"));
    }
    // normal subgroups reduce to the aperiodic count of the quotient
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      if (!lattice.is_normal(h)) continue;
      auto reduced = psi_normal(quotient(g, lattice[h]), q);
      c.expect(reduced.psi == psi[h], tag("quotient by " + members(lattice[h])));
    }
  }

  void chain(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      BigInt value;
      try {
        value = psi_chain_checked(lattice, h, q);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAChain) continue;
        throw;
      }
      c.expect(value == psi[h], [&] {
        return "q=" + std::to_string(q) + " H=" + members(lattice[h]) + ": chain gives " +
               to_string(value);
      });
    }
    c.skip("no interval [H, G] is a nontrivial chain");
  }

  void aperiodic_bound(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    const auto n = g.order();
    BigInt bound = fix_count(n, q) - fix_count(n - 1, q);
    c.expect(psi[lattice.trivial()] >= bound, [&] {
      return "q=" + std::to_string(q) + ": " + to_string(psi[lattice.trivial()]) + " < " +
             to_string(bound);
    });
  }

  void oracle(Check& c, std::uint64_t q, const std::vector<BigInt>& psi) {
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      if (!bounded_power(q, lattice[h].index(), options.oracle.budget)) continue;
      auto brute = brute_psi(g, lattice[h], q, options.oracle);
      c.expect(brute == psi[h], [&] {
        return "q=" + std::to_string(q) + " H=" + members(lattice[h]) + ": enumeration " +
               to_string(brute) + ", formula " + to_string(psi[h]);
      });
    }
    c.skip("q^[G:H] exceeds the enumeration budget for every H");
  }

  // One pass over A^G: exact stabiliser of every configuration.
  std::vector<std::uint64_t> stabilizer_tally(std::uint64_t q, std::uint64_t total) {
    const auto n = g.order();
    std::unordered_map<std::uint64_t, SubgroupId> by_mask;
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      std::uint64_t m = 0;
      for (Element e : lattice[h].elements()) m |= std::uint64_t{1} << e;
      by_mask.emplace(m, h);
    }
    // a fixes x iff all of <a> does, so one generator per cyclic subgroup
    std::vector<std::pair<Element, std::uint64_t>> cyclic;
    for (Element a = 1; a < n; ++a) {
      std::uint64_t m = 0;
      for (Element e = a; e != 0; e = g.mul(e, a)) m |= std::uint64_t{1} << e;
      if (std::none_of(cyclic.begin(), cyclic.end(), [&](const auto& c) { return c.second == m; })) {
        cyclic.emplace_back(a, m);
      }
    }
    std::vector<std::uint64_t> tally(lattice.size(), 0);
    std::vector<std::uint32_t> x(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t m = 1;
      for (const auto& [a, mask] : cyclic) {
        if ((m & mask) == mask) continue;
        bool fixed = true;
        for (Element b = 0; b < n && fixed; ++b) fixed = x[g.mul(a, b)] == x[b];
        if (fixed) m |= mask;
      }
      ++tally[by_mask.at(m)];
      for (std::size_t i = 0; i < n; ++i) {  // odometer increment
        if (++x[i] < q) break;
        x[i] = 0;
      }
    }
    return tally;
  }

  void fix_counts(Check& c, std::uint64_t q, const std::vector<std::uint64_t>& tally) {
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      BigInt fixed = 0;
      for (SubgroupId k : lattice.supergroups(h)) fixed += tally[k];
      c.expect(fixed == fix_count(lattice[h].index(), q), [&] {
        return "q=" + std::to_string(q) + " |Fix(" + members(lattice[h]) + ")| = " + to_string(fixed);
      });
    }
  }

  void census(Check& c, std::uint64_t q, const std::vector<std::uint64_t>& tally,
              const std::vector<BigInt>& psi) {
    BigInt sum = 0;
    for (SubgroupId h = 0; h < lattice.size(); ++h) {
      sum += tally[h];
      c.expect(BigInt(tally[h]) == psi[h], [&] {
        return "q=" + std::to_string(q) + " H=" + members(lattice[h]) + ": " +
               std::to_string(tally[h]) + " configurations";
      });
    }
    c.expect(sum == fix_count(g.order(), q), [&] { return "census does not cover A^G"; });
  }

  void burnside(Check& c, std::uint64_t q) {
    auto census = brute_orbit_census(lattice, q, options.oracle);
    BigInt orbits = 0;
    for (const auto& entry : census) orbits += entry.alpha;
    auto expected = burnside_orbit_count(g, q);
    c.expect(orbits == expected, [&] {
      return "q=" + std::to_string(q) + ": " + to_string(orbits) + " orbits, Burnside " +
             to_string(expected);
    });
  }

  void fix_monotonicity(Check& c, std::uint64_t q) {
    ShiftTables tables(g);
    for (SubgroupId k = 1; k < lattice.size(); ++k) {
      auto count = bounded_power(q, lattice[k].index(), options.oracle.budget);
      if (!count) continue;
      // coset labellings: x[b] depends only on the right coset K b
      std::vector<std::uint32_t> coset_of(g.order(), 0);
      std::vector<bool> seen(g.order(), false);
      std::uint32_t cosets = 0;
      for (Element b = 0; b < g.order(); ++b) {
        if (seen[b]) continue;
        for (Element e : lattice[k].elements()) {
          seen[g.mul(e, b)] = true;
          coset_of[g.mul(e, b)] = cosets;
        }
        ++cosets;
      }
      for (std::uint64_t code = 0; code < *count; ++code) {
        auto labels = Configuration::decode(code, cosets, q);
        Configuration x{std::vector<std::uint32_t>(g.order()), q};
        for (Element b = 0; b < g.order(); ++b) x.letters[b] = labels.letters[coset_of[b]];
        for (SubgroupId h : lattice.subgroups_of(k)) {
          bool fixed = true;
          for (Element a : lattice[h].elements()) fixed = fixed && shift(x, a, tables) == x;
          c.expect(fixed, [&] {
            return "x fixed by " + members(lattice[k]) + " but not by " + members(lattice[h]);
          });
        }
      }
    }
    c.skip("q^[G:K] exceeds the enumeration budget");
  }

  void action_axioms(Check& c, std::uint64_t q) {
    ShiftTables tables(g);
    for (const auto& x : sample_configurations(g.order(), q)) {
      c.expect(shift(x, 0, tables) == x, [] { return "identity moves a configuration"; });
      for (Element a = 0; a < g.order(); ++a) {
        auto kx = shift(x, a, tables);
        for (Element b = 0; b < g.order(); ++b) {
          c.expect(shift(kx, b, tables) == shift(x, g.mul(b, a), tables), [&] {
            return "shift by " + std::to_string(a) + " then " + std::to_string(b);
          });
        }
      }
    }
  }

  void stabilizer_conjugation(Check& c, std::uint64_t q) {
    ShiftTables tables(g);
    for (const auto& x : sample_configurations(g.order(), q)) {
      auto s = stabilizer(x, tables);
      for (Element a = 0; a < g.order(); ++a) {
        c.expect(stabilizer(shift(x, a, tables), tables).mask() == conjugate_set(g, s.mask(), a),
                 [&] { return "stabiliser of a shift by " + std::to_string(a); });
      }
    }
  }

  std::vector<CheckResult> run() {
    std::vector<CheckResult> out;
    if (wanted("mobius-sums")) out.push_back(mobius_sums());
    if (wanted("lattice-closure")) out.push_back(lattice_closure());
    if (wanted("lagrange")) out.push_back(lagrange());
    if (wanted("mobius-conjugation")) out.push_back(mobius_conjugation());

    std::vector<std::pair<std::string, Check>> per_q;
    for (std::size_t i = 4; i < verify_check_names().size(); ++i) {
      const auto& name = verify_check_names()[i];
      if (wanted(name)) per_q.emplace_back(name, Check(name));
    }
    auto check = [&](const std::string& name) -> Check* {
      for (auto& [n, c] : per_q) {
        if (n == name) return &c;
      }
      return nullptr;
    };

    for (std::uint64_t q : options.qs) {
      std::vector<BigInt> psi(lattice.size());
      for (SubgroupId h = 0; h < lattice.size(); ++h) psi[h] = psi_value(lattice, h, q);
      if (auto* c = check("inversion")) inversion(*c, q, psi);
      if (auto* c = check("partition")) partition(*c, q, psi);
      if (auto* c = check("psi-conjugation")) psi_conjugation(*c, q, psi);
      if (auto* c = check("closed-forms")) closed_forms(*c, q, psi);
      if (auto* c = check("chain")) chain(*c, q, psi);
      if (auto* c = check("aperiodic-bound")) aperiodic_bound(*c, q, psi);
      if (auto* c = check("oracle")) oracle(*c, q, psi);

      auto total = g.order() <= 64 ? bounded_power(q, g.order(), options.oracle.budget)
                                   : std::nullopt;
      bool full = check("fix-counts") || check("census");
      if (total && full) {
        auto tally = stabilizer_tally(q, *total);
        if (auto* c = check("fix-counts")) fix_counts(*c, q, tally);
        if (auto* c = check("census")) census(*c, q, tally, psi);
      }
      if (total) {
        if (auto* c = check("burnside")) burnside(*c, q);
      } else {
        for (const char* name : {"fix-counts", "census", "burnside"}) {
          if (auto* c = check(name)) c->skip("q^|G| exceeds the enumeration budget");
        }
      }
      if (auto* c = check("fix-monotonicity")) fix_monotonicity(*c, q);
      if (auto* c = check("action-axioms")) action_axioms(*c, q);
      if (auto* c = check("stabilizer-conjugation")) stabilizer_conjugation(*c, q);
    }
    for (auto& [name, c] : per_q) out.push_back(c.finish());
    return out;
  }
};

}  // namespace

std::vector<CheckResult> verify_group(const SubgroupLattice& lattice, const VerifyOptions& options) {
  for (const auto& name : options.checks) {
    const auto& all = verify_check_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw Error(ErrorCode::InvalidInput, "unknown check '" + name + "'");
    }
  }
  for (auto q : options.qs) {
    if (q < 2) throw Error(ErrorCode::AlphabetTooSmall, "q must be at least 2");
  }
  return Verifier{lattice, lattice.group(), options}.run();
}

}  // namespace periodica
