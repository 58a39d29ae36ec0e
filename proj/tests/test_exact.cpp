#include <doctest.h>

#include "preriesz/ecseq.hpp"
#include "preriesz/error.hpp"
#include "preriesz/family.hpp"
#include "preriesz/scalar.hpp"
#include "preriesz/zseq.hpp"

using namespace preriesz;

TEST_SUITE("exact") {

TEST_CASE("scalar parse and print") {
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK(Scalar::parse("7").str() == "7");
  CHECK(Scalar::parse("0/5").is_zero());
  CHECK_THROWS_AS(Scalar::parse("1/0"), FormatError);
  CHECK_THROWS_AS(Scalar::parse("x"), FormatError);
  CHECK(inverse_power_of_two(3) == Scalar(1, 8));
}

TEST_CASE("ec sequences are canonical") {
  CHECK(EcSeq({3, 2, 2}, 2).str() == "ec: [3] tail 2");
  CHECK(EcSeq({Scalar(1), Scalar(0)}, 0) == EcSeq::unit(1));
  CHECK(EcSeq::unit(2).at(2) == 1);
  CHECK(EcSeq::unit(2).at(200).is_zero());
  CHECK(EcSeq::ones_from(3).str() == "ec: [0, 0] tail 1");
  CHECK(EcSeq::parse("ec: [1, 1/2] tail 0").at(2) == Scalar(1, 2));
  CHECK_THROWS_AS(EcSeq::parse("ec: [1,] tail 0"), FormatError);
  CHECK_THROWS_AS(EcSeq::parse("ec [1] tail 0"), FormatError);
  CHECK_THROWS_AS(EcSeq::parse("ec: [1] tail 0 extra"), FormatError);
}

TEST_CASE("ec_compare") {
  const auto zero = EcSeq::constant(0);
  const auto one = EcSeq::constant(1);
  auto r = ec_compare(zero, one);
  CHECK(r.leq);
  CHECK_FALSE(r.geq);
  const EcSeq x({1, -2, Scalar(1, 3)}, 5);
  r = ec_compare(x, x);
  CHECK(r.leq);
  CHECK(r.geq);
  r = ec_compare(EcSeq::ones_from(2), EcSeq::ones_from(1));
  CHECK(r.leq);
  CHECK_FALSE(r.geq);
  r = ec_compare(EcSeq::unit(1), EcSeq::unit(2));
  CHECK_FALSE(r.leq);
  CHECK_FALSE(r.geq);
}

TEST_CASE("lattice operations") {
  const EcSeq x({2, -1}, Scalar(1, 2));
  CHECK(meet(x, x) == x);
  CHECK(meet(EcSeq::unit(1), EcSeq::unit(2)) == EcSeq::constant(0));
  CHECK(join(EcSeq({1, 0}, 0), EcSeq({0, 1}, 0)) == EcSeq({1, 1}, 0));
  CHECK(abs(x) == EcSeq({2, 1}, Scalar(1, 2)));
}

TEST_CASE("basis coordinates") {
  CHECK(ec_to_basis(EcSeq::constant(1)) == BasisCoords{1, {}});
  CHECK(ec_to_basis(EcSeq::unit(1)) == BasisCoords{0, {{1, 1}}});
  CHECK(ec_to_basis(EcSeq({3, 2, 2}, 2)) == BasisCoords{2, {{1, 1}}});
  CHECK(basis_to_ec(BasisCoords{2, {{1, 1}}}) == EcSeq({3}, 2));
}

TEST_CASE("disjointness") {
  CHECK(disjoint(EcSeq::unit(1), EcSeq::unit(2)));
  CHECK_FALSE(disjoint(EcSeq::constant(1), EcSeq::unit(1)));
  const EcSeq x({4, -3}, 7);
  CHECK(disjoint(x, EcSeq::constant(0)));
  CHECK(disjoint_by_upper_sets(x, EcSeq::constant(0)));
  CHECK_FALSE(disjoint_by_upper_sets(EcSeq::constant(1), EcSeq::unit(1)));
}

TEST_CASE("Z membership") {
  CHECK(z_in_Z(ZSeq::constant(0)));
  const Scalar delta(3, 2);
  const ZSeq omega({{-2, delta}, {-3, Scalar(-2) * delta}}, 0, 0);
  CHECK(z_in_Z(omega));
  for (std::int64_t n = 1; n <= 5; ++n) CHECK(z_in_Z(ZSeq({{n, 1}, {n + 1, -1}}, 0, 0)));
  CHECK(z_in_Z(ZSeq::constant(1)));
  CHECK(ZSeq::constant(1).negative_weighted_sum() == 1);
  CHECK_FALSE(z_in_Z(ZSeq::unit(-1)));
  CHECK(z_in_Z(ZSeq::unit(1)));
  CHECK(embed_natural(EcSeq({5}, 1)).at(0).is_zero());
  CHECK(embed_natural(EcSeq({5}, 1)).at(1) == 5);
}

TEST_CASE("zseq text form") {
  const ZSeq z = ZSeq::dense(-2, {1, 0, Scalar(1, 2)}, 3, -1);
  CHECK(ZSeq::parse(z.str()) == z);
  CHECK(ZSeq::unit(-2, 3).str() == "zseq: {-2:3} left 0 right 0");
  CHECK_THROWS_AS(ZSeq::parse("zseq: {1:2} left 0"), FormatError);
}

TEST_CASE("monotone families") {
  const auto ys = family_check(ones_from_family(6));
  CHECK(ys.monotone);
  CHECK(ys.final_term == EcSeq::ones_from(6));
  const MonotoneFamily<EcSeq> constant{{EcSeq({1}, 2), EcSeq({1}, 2), EcSeq({1}, 2)}, Direction::increasing, {}};
  const auto c = family_check(constant);
  CHECK(c.monotone);
  CHECK(c.componentwise_limit == EcSeq({1}, 2));
  const auto inc = family_check(unit_family(3, Direction::increasing));
  REQUIRE_FALSE(inc.monotone);
  CHECK(inc.violation->first == 1);
  CHECK(inc.violation->second == 2);
  CHECK(inc.violation->component == 1);
  const auto dec = family_check(unit_family(3, Direction::decreasing));
  REQUIRE_FALSE(dec.monotone);
  CHECK(dec.violation->component == 2);
  CHECK_FALSE(family_check(bump_family(4, Direction::decreasing)).monotone);
}

}  // TEST_SUITE
