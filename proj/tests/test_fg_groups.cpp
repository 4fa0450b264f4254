#include <doctest.h>

#include "oracles.hpp"
#include "periodica/coset_table.hpp"
#include "periodica/counting.hpp"
#include "periodica/error.hpp"
#include "periodica/integer_matrix.hpp"
#include "periodica/presentation.hpp"
#include "periodica/reduction.hpp"
#include "periodica/shift_oracle.hpp"

using namespace periodica;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

std::size_t total_subgroups(const std::vector<LowIndexClass>& classes, std::size_t index) {
  std::size_t total = 0;
  for (const auto& c : classes) {
    if (c.index == index) total += c.conjugates;
  }
  return total;
}

// sum over d1 d2 d3 = n of d2 d3^2, the number of index-n sublattices of Z^3
std::uint64_t sublattices_z3(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (n % a) continue;
    for (std::uint64_t b = 1; b <= n / a; ++b) {
      if ((n / a) % b) continue;
      std::uint64_t c = n / a / b;
      total += b * c * c;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("presentation parsing") {
  auto z2 = parse_presentation("< a | a^2 >");
  CHECK(z2.generators == std::vector<std::string>{"a"});
  REQUIRE(z2.relators.size() == 1);
  CHECK(z2.relators[0] == Word{1, 1});
  CHECK(z2.subgroup_words.empty());

  auto s3 = parse_presentation("< a, b | a^2, b^3, (a b)^2 >");
  CHECK(s3.generators.size() == 2);
  CHECK(s3.relators[2] == Word{1, 2, 1, 2});

  auto z2sq = parse_presentation("< a, b | [a,b] >");
  CHECK(z2sq.relators[0] == Word{-1, -2, 1, 2});

  auto with_h = parse_presentation("<a,b|[a,b]; H = a^2, b^2>");
  CHECK(with_h.subgroup_words == std::vector<Word>{{1, 1}, {2, 2}});

  auto inverse = parse_presentation("< x | x^-3 x x >");
  CHECK(inverse.relators[0] == Word{-1});

  // juxtaposed single-letter generators
  CHECK(parse_presentation("< a, b | ab >").relators[0] == Word{1, 2});
  CHECK(parse_presentation("< a, b | a*b^2 >").relators[0] == Word{1, 2, 2});
  CHECK(parse_presentation("< a, b | >").relators.empty());
  CHECK(parse_presentation("< a | a a^-1 >").relators.empty());

  auto multi = parse_presentation("< r1, s | r1^2, s r1 >");
  CHECK(multi.relators[1] == Word{2, 1});
  CHECK(parse_presentation(multi.to_string()).relators == multi.relators);
  CHECK(parse_presentation(with_h.to_string()).subgroup_words == with_h.subgroup_words);
}

TEST_CASE("presentation errors") {
  CHECK(code_of([] { parse_presentation("< a | b >"); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([] { parse_presentation("< a | a^ >"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("< a | a^2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("a | a^2 >"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("< a, a | a >"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("< A | A >"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("< a | (a >"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_presentation("< a | a > ; K = a"); }) == ErrorCode::SyntaxError);
  try {
    parse_presentation("< a | a^ >");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("coset enumeration") {
  auto z4 = coset_enumerate(parse_presentation("< a | a^4 >"));
  CHECK(z4.size() == 4);
  CHECK(z4.is_complete());
  CHECK(z4.is_consistent());

  auto s3p = parse_presentation("< a, b | a^2, b^3, (a b)^2 >");
  auto s3 = coset_enumerate(s3p);
  CHECK(s3.size() == 6);
  CHECK(s3.satisfies(s3p.relators));
  CHECK(s3.is_transitive());

  CHECK(coset_enumerate(parse_presentation("< a, b | [a,b] ; H = a^2, b >")).size() == 2);
  CHECK(coset_enumerate(parse_presentation("< a, b | a^2, b^3, (a b)^2 ; H = a >")).size() == 3);
  CHECK(coset_enumerate(parse_presentation("< a, b | a^3, b^3, (a b)^3 ; H = a, b >")).size() == 1);
  // binary tetrahedral group, a classic enumeration with coincidences
  CHECK(coset_enumerate(parse_presentation("< a, b | a^3 b^-3, a^3 (a b)^-2 >")).size() == 24);
  // A5
  CHECK(coset_enumerate(parse_presentation("< a, b | a^2, b^3, (a b)^5 >")).size() == 60);

  CHECK(code_of([] { coset_enumerate(parse_presentation("< a, b | [a,b] >"), 200); }) ==
        ErrorCode::CosetLimitExceeded);
  CHECK(code_of([] { coset_enumerate(parse_presentation("< a | >"), 50); }) ==
        ErrorCode::CosetLimitExceeded);
}

TEST_CASE("enumeration is deterministic") {
  auto p = parse_presentation("< a, b | a^2, b^3, (a b)^4 ; H = b >");
  auto first = coset_enumerate(p);
  CHECK(first.size() == 8);
  for (int i = 0; i < 5; ++i) CHECK(coset_enumerate(p) == first);
  CHECK(first.standardized() == first);
}

TEST_CASE("coset action") {
  auto table = coset_enumerate(parse_presentation("< a | a^4 ; H = a^2 >"));
  auto action = coset_action_group(table);
  CHECK(action.group.order() == 2);
  CHECK(action.stabilizer.order() == 1);
  auto lattice = all_subgroups(action.group);
  CHECK(psi(lattice, action.stabilizer, 3).psi == 9 - 3);

  auto s3 = coset_action_group(coset_enumerate(parse_presentation("< a, b | a^2, b^3, (a b)^2 ; H = a >")));
  CHECK(s3.group.order() == 6);
  CHECK(s3.stabilizer.order() == 2);
  auto l3 = all_subgroups(s3.group);
  for (std::uint64_t q = 2; q <= 4; ++q) {
    CHECK(psi(l3, s3.stabilizer, q).psi == q * q * q - q);
    CHECK(brute_psi(s3.group, s3.stabilizer, q) == q * q * q - q);
  }
}

TEST_CASE("presentation reduction") {
  auto s3 = reduce_presentation(parse_presentation("< a, b | a^2, b^3, (a b)^2 >"));
  CHECK(s3.group.order() == 6);
  CHECK(psi(all_subgroups(s3.group), s3.subgroup, 2).psi == 42);

  auto v4 = reduce_presentation(parse_presentation("< a, b | [a,b] ; H = a^2, b^2 >"));
  CHECK(v4.subgroup.index() == 4);
  auto lattice = all_subgroups(v4.group);
  const int expected[] = {2, 15, 54, 140};
  for (std::uint64_t q = 2; q <= 5; ++q) {
    CHECK(psi(lattice, v4.subgroup, q).alpha == expected[q - 2]);
  }
}

TEST_CASE("low-index subgroups") {
  auto free2 = parse_presentation("< a, b | >");
  auto classes = low_index_subgroups(free2, 6);
  auto hall = oracle::hall_free_group_counts(2, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(BigInt(total_subgroups(classes, n)) == hall[n]);
  }
  CHECK(total_subgroups(classes, 3) == 13);

  auto z = low_index_subgroups(parse_presentation("< a | >"), 10);
  CHECK(z.size() == 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(total_subgroups(z, n) == 1);

  auto s3 = low_index_subgroups(parse_presentation("< a, b | a^2, b^3, (a b)^2 >"), 6);
  // classes: S3, A3, <(12)>, trivial
  CHECK(s3.size() == 4);
  CHECK(total_subgroups(s3, 3) == 3);

  for (const auto& c : classes) {
    CHECK(c.table.is_complete());
    CHECK(c.table.is_transitive());
    CHECK(c.table.is_consistent());
    CHECK(c.table.size() == c.index);
    CHECK(conjugacy_class_size(c.table) == c.conjugates);
  }
  CHECK(std::is_sorted(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return x.table < y.table;
  }));

  CHECK(code_of([&] { low_index_subgroups(free2, 13); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("Z^2 sublattices two ways") {
  auto classes = low_index_subgroups(parse_presentation("< a, b | [a,b] >"), 12);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(total_subgroups(classes, n) == oracle::sigma(n));
    CHECK(hnf_sublattices(2, n).size() == oracle::sigma(n));
  }
}

TEST_CASE("Hermite normal forms") {
  auto one = hnf_sublattices(1, 7);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == IntegerMatrix::parse("7"));
  CHECK(hnf_sublattices(2, 2).size() == 3);
  CHECK(hnf_sublattices(2, 4).size() == 7);
  for (std::uint64_t n = 1; n <= 8; ++n) CHECK(hnf_sublattices(3, n).size() == sublattices_z3(n));
  for (const auto& m : hnf_sublattices(3, 6)) CHECK(determinant(m) == 6);
}

TEST_CASE("integer matrices") {
  auto m = IntegerMatrix::parse("2,1;0,3");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == 1);
  CHECK(m.to_string() == "2,1;0,3");
  CHECK(determinant(m) == 6);
  CHECK(determinant(IntegerMatrix::parse("0,1;1,0")) == -1);
  CHECK(determinant(IntegerMatrix::parse("1,2;2,4")) == 0);
  CHECK(IntegerMatrix::parse(" -4 , 5 ").to_string() == "-4,5");
  CHECK(code_of([] { IntegerMatrix::parse("1,2;3"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { IntegerMatrix::parse("1,x"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { IntegerMatrix::parse(""); }) == ErrorCode::SyntaxError);
}

TEST_CASE("Smith normal forms") {
  CHECK(smith_diagonal(IntegerMatrix::parse("2,1;0,3")) == std::vector<BigInt>{1, 6});
  CHECK(smith_diagonal(IntegerMatrix::parse("2,0;0,2")) == std::vector<BigInt>{2, 2});
  CHECK(smith_diagonal(IntegerMatrix::parse("4,0;0,6")) == std::vector<BigInt>{2, 12});
  CHECK(smith_diagonal(IntegerMatrix::parse("-3")) == std::vector<BigInt>{3});

  auto z6 = smith_quotient(IntegerMatrix::parse("2,1;0,3"));
  CHECK(fingerprint(z6).name() == "Z6");
  auto v4 = smith_quotient(IntegerMatrix::parse("2,0;0,2"));
  CHECK(fingerprint(v4).name() == "Z2xZ2");
  CHECK(psi(all_subgroups(v4), 0, 2).alpha == 2);
  auto z23 = smith_quotient(IntegerMatrix::parse("2,0;0,3"));
  CHECK(psi(all_subgroups(z23), 0, 2).alpha == 9);

  CHECK(code_of([] { smith_diagonal(IntegerMatrix::parse("1,2;2,4")); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([] { smith_quotient(IntegerMatrix::parse("2000,0;0,1")); }) ==
        ErrorCode::OrderLimitExceeded);

  auto r = reduce_sublattice(IntegerMatrix::parse("2,0;0,2"));
  CHECK(psi(all_subgroups(r.group), r.subgroup, 4).alpha == 54);
}
