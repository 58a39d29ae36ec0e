#include <doctest.h>

#include "preriesz/example18.hpp"
#include "preriesz/family.hpp"
#include "support/generators.hpp"

using namespace preriesz;
using namespace preriesz::testing;

namespace {

// T(x)_m = x_m − x_{m−1} with x_0 = 0, and nothing at m ≤ 0.
Scalar difference_at(const EcSeq& x, std::int64_t m) {
  if (m <= 0) return {};
  const auto n = static_cast<std::size_t>(m);
  return x.at(n) - (n == 1 ? Scalar{} : x.at(n - 1));
}

void check_witness(const ObstructionWitness& w, const std::vector<ZSeq>& family) {
  CHECK(z_in_Z(w.omega));
  CHECK_FALSE(z_compare(w.omega, ZSeq::constant(0)).leq);
  CHECK(w.omega.at(-static_cast<std::int64_t>(w.j)) == w.delta);
  CHECK(w.omega.at(-static_cast<std::int64_t>(w.j) - 1) == Scalar(-2) * w.delta);
  for (const auto& z : family) CHECK(z_compare(w.omega, z).leq);
}

}  // namespace

TEST_SUITE("example18") {

TEST_CASE("the shift operator on unit vectors") {
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(t_apply(EcSeq::unit(n)) == bump(n));
    CHECK(bump(n).at(static_cast<std::int64_t>(n)) == 1);
    CHECK(bump(n).at(static_cast<std::int64_t>(n) + 1) == -1);
  }
  CHECK(t_apply(EcSeq::constant(1)) == ZSeq::unit(1));
  CHECK(t_apply(EcSeq{}) == ZSeq{});
}

TEST_CASE("membership in Y and Z") {
  const ZSeq t1e1 = t_apply(EcSeq::unit(1), ShiftPart::T1);
  CHECK(t1e1 == ZSeq::unit(1));
  CHECK(check_membership(t1e1, SpaceYZ::Y).member);
  const auto z = check_membership(t1e1, SpaceYZ::Z);
  CHECK(z.member);
  CHECK(z.weighted_sum == 0);
  CHECK(z.limit == 0);
  CHECK(check_membership(ZSeq::constant(1), SpaceYZ::Z).member);
  CHECK(check_membership(ZSeq::constant(1), SpaceYZ::Z).weighted_sum == 1);
  CHECK(check_membership(make_obstruction(3, Scalar(5, 7)).omega, SpaceYZ::Z).member);
  CHECK_FALSE(check_membership(ZSeq::constant(0) + ZSeq::unit(-1), SpaceYZ::Z).member);
}

TEST_CASE("scripted families") {
  const auto fams = scripted_families();
  CHECK(fams.size() >= 10);
  int obstructions = 0;
  for (const auto& f : fams) {
    CAPTURE(f.name);
    const RefuterResult r = refute_oconvergence(f.terms);
    CHECK(r.outcome == f.expected);
    if (f.expected == RefuterResult::Outcome::check_failed) CHECK(r.failed_check == f.expected_check);
    CHECK(r.outcome != RefuterResult::Outcome::not_triggered);
    CHECK(verify(r, f.terms));
    if (r.witness) {
      ++obstructions;
      check_witness(*r.witness, f.terms);
    }
  }
  CHECK(obstructions >= 3);
}

TEST_CASE("the empty-left family fails membership") {
  std::vector<ZSeq> terms;
  for (std::int64_t n = 1; n <= 6; ++n) terms.push_back(ZSeq::dense(n, {}, 0, 1));
  const RefuterResult r = refute_oconvergence(terms);
  CHECK(r.outcome == RefuterResult::Outcome::check_failed);
  CHECK(r.failed_check == 1);
  CHECK(r.term == 1);
}

TEST_CASE("the bumps themselves are rejected") {
  std::vector<ZSeq> terms;
  for (std::size_t n = 1; n <= 6; ++n) terms.push_back(bump(n));
  const RefuterResult r = refute_oconvergence(terms);
  CHECK(r.outcome == RefuterResult::Outcome::check_failed);
  CHECK(r.failed_check >= 2);
  CHECK(verify(r, terms));
}

TEST_CASE("zero operator is not refuted") {
  const auto fams = scripted_families();
  for (const auto& f : fams) {
    const RefuterResult r = refute_oconvergence(f.terms, 0, ShiftOperator::zero);
    if (r.outcome != RefuterResult::Outcome::check_failed) CHECK(r.outcome == RefuterResult::Outcome::not_triggered);
    CHECK(verify(r, f.terms, 0, ShiftOperator::zero));
  }
}

TEST_CASE("report verdicts") {
  const Report r = run_example18();
  CHECK(r.all_passed());
  CHECK(r.verdict == "T ∈ L_oc(X, Y) evidence passes; T ∉ L_oc(X, Z) obstruction reproduced");
  CHECK(run_example18(5).verdict == r.verdict);
  CHECK(run_example18(50).verdict == r.verdict);
  const Report z = run_example18(0, ShiftOperator::zero);
  CHECK(z.verdict == "refuter not triggered; zero operator trivially order continuous");
}

TEST_CASE("T decomposes and lands in Z") {
  Rng rng(51);
  for (int k = 0; k < 1000; ++k) {
    const EcSeq x = random_ec(rng, 8);
    const ZSeq t = t_apply(x);
    CHECK(t == t_apply(x, ShiftPart::T1) - t_apply(x, ShiftPart::T2));
    CHECK(z_in_Z(t));
    for (std::int64_t m = -3; m <= 12; ++m) CHECK(t.at(m) == difference_at(x, m));
  }
}

TEST_CASE("componentwise decrease is decrease in Y") {
  Rng rng(52);
  for (int k = 0; k < 1000; ++k) {
    MonotoneFamily<ZSeq> f{{random_z(rng)}, Direction::decreasing, {}};
    const int len = static_cast<int>(rng.integer(2, 5));
    for (int n = 1; n < len; ++n) f.terms.push_back(f.terms.back() - abs(random_z(rng)));
    const auto rep = family_check(f);
    CHECK(rep.monotone);
    for (std::size_t n = 0; n + 1 < f.terms.size(); ++n) {
      CHECK(z_compare(f.terms[n + 1], f.terms[n]).leq);
      CHECK(check_membership(f.terms[n], SpaceYZ::Y).member);
    }
  }
}

TEST_CASE("refuter output always verifies") {
  Rng rng(53);
  int obstructions = 0;
  for (int k = 0; k < 500; ++k) {
    // Perturbations of the obstruction-producing shape: ones from n on with a left tail.
    std::vector<ZSeq> terms;
    const Scalar left = rng.rational(0, 3);
    for (std::int64_t n = 1; n <= 5; ++n) {
      ZSeq z = ZSeq::dense(n, {}, left, 1);
      if (rng.chance(30)) z += ZSeq::unit(rng.integer(-4, 8), rng.rational(-1, 1));
      const Scalar fix = z.limit() - z.negative_weighted_sum();
      if (rng.chance(80)) z += ZSeq::unit(-1, fix * Scalar(2));
      terms.push_back(z);
    }
    const RefuterResult r = refute_oconvergence(terms);
    CHECK(verify(r, terms));
    if (r.witness) {
      ++obstructions;
      check_witness(*r.witness, terms);
    }
  }
  CHECK(obstructions >= 20);
}

}  // TEST_SUITE
