#include <doctest.h>

#include "oracles.hpp"
#include "periodica/catalog.hpp"
#include "periodica/classification.hpp"
#include "periodica/counting.hpp"
#include "periodica/error.hpp"
#include "periodica/necklace.hpp"
#include "periodica/number_theory.hpp"
#include "periodica/shift_oracle.hpp"

using namespace periodica;

namespace {

SubgroupId first_of_order(const SubgroupLattice& l, std::size_t order) {
  for (SubgroupId i = 0; i < l.size(); ++i) {
    if (l[i].order() == order) return i;
  }
  FAIL("no subgroup of that order");
  return 0;
}

}  // namespace

TEST_CASE("fix_count") {
  CHECK(fix_count(1, 7) == 7);
  CHECK(fix_count(2, 2) == 4);
  CHECK(fix_count(6, 2) == 64);
  CHECK(fix_count(64, 2) == BigInt("18446744073709551616"));
  CHECK_THROWS_AS(fix_count(kMaxIndex + 1, 2), Error);
}

TEST_CASE("psi through the lattice") {
  auto z2 = all_subgroups(cyclic_group(2));
  auto r = psi(z2, z2.trivial(), 2);
  CHECK(r.psi == 2);
  CHECK(r.alpha == 1);
  CHECK(r.terms.size() == 2);

  auto top = psi(z2, z2.top(), 5);
  CHECK(top.psi == 5);
  CHECK(top.alpha == 5);

  auto s3 = all_subgroups(builtin_group("S3"));
  auto rs = psi(s3, s3.trivial(), 2);
  CHECK(rs.psi == 42);
  CHECK(rs.alpha == 7);
  CHECK(rs.index == 6);
  CHECK(rs.class_size == 1);
  // terms: mu = 1, -1 x3, -1, 3
  std::vector<BigInt> mus;
  for (const auto& t : rs.terms) mus.push_back(t.mu);
  CHECK(mus == std::vector<BigInt>{1, -1, -1, -1, -1, 3});

  auto v4 = all_subgroups(builtin_group("Z2xZ2"));
  CHECK(psi(v4, v4.trivial(), 3).alpha == 15);

  CHECK_THROWS_AS(psi(z2, z2.trivial(), 1), Error);
  try {
    psi(z2, z2.trivial(), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphabetTooSmall);
  }
}

TEST_CASE("chain formula") {
  CHECK(psi_chain(4, 2, 2) == 12);
  CHECK(psi_chain(5, 1, 3) == 243 - 3);
  CHECK_THROWS_AS(psi_chain(1, 1, 2), Error);
  CHECK_THROWS_AS(psi_chain(4, 3, 2), Error);

  auto z4 = all_subgroups(cyclic_group(4));
  CHECK(psi_chain_checked(z4, z4.trivial(), 2) == 12);
  CHECK(psi(z4, z4.trivial(), 2).alpha == 3);
  try {
    psi_chain_checked(z4, z4.top(), 2);
    FAIL("expected NotAChain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAChain);
  }
  auto v4 = all_subgroups(builtin_group("Z2xZ2"));
  CHECK_THROWS_AS(psi_chain_checked(v4, v4.trivial(), 2), Error);
  // maximal subgroups: q^m - q
  auto s3 = all_subgroups(builtin_group("S3"));
  CHECK(psi_chain_checked(s3, first_of_order(s3, 2), 2) == 8 - 2);
}

TEST_CASE("normal reduction on quotients") {
  CHECK(psi_normal(cyclic_group(2), 3).alpha == 3);
  CHECK(psi_normal(cyclic_group(1), 4).psi == 4);
  CHECK(psi_normal(cyclic_group(7), 5).alpha == 11160);
}

TEST_CASE("closed forms") {
  CHECK(psi_cyclic(1, 3) == 3);
  CHECK(psi_cyclic(6, 2) == 54);
  CHECK(psi_cyclic(7, 2) == 128 - 2);
  CHECK(psi_prime_power(2, 2, 2) == 12);
  CHECK(psi_prime_power(3, 1, 3) == 24);
  CHECK(psi_prime_power(5, 1, 4) == psi_cyclic(5, 4));
  CHECK(psi_elementary_p2(2, 2) == 8);
  CHECK(psi_elementary_p2(2, 4) == 216);
  // 3^4 - 3 * 3^2 + 2 * 3, checked against alpha = 15 via psi / 4
  CHECK(psi_elementary_p2(2, 3) == 60);
  CHECK(psi_elementary_p2(2, 3) / 4 == 15);
  CHECK_THROWS_AS(psi_prime_power(4, 1, 2), Error);
  CHECK_THROWS_AS(psi_elementary_p2(9, 2), Error);
}

TEST_CASE("alpha from psi") {
  CountReport r;
  r.psi = 2;
  r.class_size = 1;
  r.index = 2;
  CHECK(alpha_from_psi(r).alpha == 1);

  r.psi = 9;
  r.index = 1;
  CHECK(alpha_from_psi(r).alpha == 9);

  // order-2 subgroup of S3, q = 2: psi = 6, class of 3, index 3
  auto g = builtin_group("S3");
  auto s3 = all_subgroups(g);
  auto h = first_of_order(s3, 2);
  auto report = psi(s3, h, 2);
  CHECK(report.psi == 6);
  CHECK(report.class_size == 3);
  CHECK(report.alpha == 6);
  auto census = brute_orbit_census(s3, 2);
  CHECK(census[s3.class_of(h)].alpha == 6);
  CHECK(census[s3.class_of(h)].psi_class == 18);

  r.psi = 3;
  r.class_size = 1;
  r.index = 2;
  try {
    alpha_from_psi(r);
    FAIL("expected DivisibilityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisibilityViolation);
  }
}

TEST_CASE("aut structure") {
  auto z2 = aut_structure(all_subgroups(cyclic_group(2)), 2);
  REQUIRE(z2.factors.size() == 2);
  CHECK(z2.factors[0].quotient.name() == "Z2");
  CHECK(z2.factors[0].alpha == 1);
  CHECK(z2.factors[1].quotient.name() == "1");
  CHECK(z2.factors[1].alpha == 2);

  auto trivial = aut_structure(all_subgroups(cyclic_group(1)), 6);
  REQUIRE(trivial.factors.size() == 1);
  CHECK(trivial.factors[0].quotient.order == 1);
  CHECK(trivial.factors[0].alpha == 6);

  auto z3 = aut_structure(all_subgroups(cyclic_group(3)), 2);
  REQUIRE(z3.factors.size() == 2);
  CHECK(z3.factors[0].quotient.name() == "Z3");
  CHECK(z3.factors[0].alpha == 2);
  CHECK(z3.factors[1].alpha == 2);

  auto s3 = aut_structure(all_subgroups(builtin_group("S3")), 2);
  REQUIRE(s3.factors.size() == 4);
  CHECK(s3.factors[0].quotient.name() == "nonabelian(order 6, ab Z2)");
  CHECK(s3.factors[1].quotient.name() == "1");  // N(H)/H for H of order 2
  CHECK(s3.factors[2].quotient.name() == "Z2");  // A3 is normal of index 2
}

TEST_CASE("aut factors partition the full shift") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto lattice = all_subgroups(builtin_group(name));
    for (std::uint64_t q = 2; q <= 3; ++q) {
      auto aut = aut_structure(lattice, q);
      CHECK(aut.factors.size() == lattice.class_count());
      BigInt total = 0;
      for (const auto& f : aut.factors) total += f.alpha * f.index;
      CHECK(total == fix_count(lattice.group().order(), q));
    }
  }
}

TEST_CASE("table of small values") {
  auto t = table_small_values();
  const std::vector<std::vector<int>> known = {
      {1, 3, 6, 10},     {2, 8, 20, 40},      {2, 15, 54, 140},    {3, 18, 60, 150},
      {6, 48, 204, 624}, {7, 108, 650, 2540}, {9, 116, 670, 2580}, {18, 312, 2340, 11160}};
  REQUIRE(t.alpha.size() == 8);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 4; ++c) CHECK(t.alpha[r][c] == known[r][c]);
  }
  CHECK(table_csv(table_small_values(3)).substr(0, 20) == "group,q2,q3\nZ2,1,3\nZ");
}

TEST_CASE("classification of small alpha") {
  auto catalog = builtin_catalog();
  auto one = classify_small_alpha(1, catalog);
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].group == "Z2");
  CHECK(one.entries[0].q == 2);

  auto ten = classify_small_alpha(10, catalog);
  CHECK(ten.attaining(4).empty());
  CHECK(ten.attaining(5).empty());
  auto seven = ten.attaining(7);
  REQUIRE(seven.size() == 1);
  CHECK(seven[0].group == "S3");
  CHECK(seven[0].q == 2);

  // jobs never change the answer
  auto parallel = classify_small_alpha(10, catalog, 4);
  REQUIRE(parallel.entries.size() == ten.entries.size());
  for (std::size_t i = 0; i < ten.entries.size(); ++i) {
    CHECK(parallel.entries[i].group == ten.entries[i].group);
    CHECK(parallel.entries[i].q == ten.entries[i].q);
    CHECK(parallel.entries[i].alpha == ten.entries[i].alpha);
  }

  // alpha_max = 20 needs every group of order 8
  try {
    classify_small_alpha(20, catalog);
    FAIL("expected CatalogIncomplete");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CatalogIncomplete);
  }
}

TEST_CASE("scan bound") {
  // (q^n - q^(n-1)) / n
  CHECK(alpha_lower_bound(2, 2).numerator == 2);
  CHECK(alpha_lower_bound(2, 2).denominator == 2);
  CHECK_FALSE(alpha_lower_bound(7, 2).exceeds(10));  // 64/7
  CHECK(alpha_lower_bound(8, 2).exceeds(10));        // 128/8
  CHECK(alpha_lower_bound(2, 6).exceeds(10));        // 30/2
}

TEST_CASE("necklaces and Lyndon words") {
  CHECK(lyndon_count(2, 2) == 1);
  CHECK(lyndon_count(6, 2) == 9);
  CHECK(lyndon_count(1, 5) == 5);
  auto words = lyndon_words(2, 2, 1000);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == Word32{0, 1});
  CHECK(is_lyndon(Word32{0, 0, 1}));
  CHECK_FALSE(is_lyndon(Word32{0, 1, 0, 1}));
  CHECK_FALSE(is_lyndon(Word32{1, 0}));
  CHECK_THROWS_AS(lyndon_words(20, 4, 1000), Error);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    auto all = lyndon_words(n, 3, 1 << 20);
    CHECK(BigInt(all.size()) == lyndon_count(n, 3));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& w : all) CHECK(is_lyndon(w));
  }
}

TEST_CASE("number theory helpers") {
  CHECK(mobius_number(1) == 1);
  CHECK(mobius_number(6) == 1);
  CHECK(mobius_number(12) == 0);
  CHECK(mobius_number(30) == -1);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("primality agrees with factorization") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    auto f = n < 2 ? decltype(factorize(2)){} : factorize(n);
    CHECK(is_prime(n) == (f.size() == 1 && f.front().second == 1));
  }
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}
