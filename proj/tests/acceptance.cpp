// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "preriesz/cli.hpp"
#include "preriesz/cover.hpp"
#include "preriesz/example18.hpp"
#include "preriesz/example21.hpp"
#include "preriesz/majorant.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace preriesz;
using namespace preriesz::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

using Window = std::vector<std::vector<int>>;

bool matches(const CoverMatrix& b, const Window& w) {
  for (std::size_t i = 1; i <= w.size(); ++i)
    for (std::size_t j = 0; j < w[i - 1].size(); ++j)
      if (b.entry(i, j) != w[i - 1][j]) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  const Window fp = {{0, 2, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}};
  const Window fq = {{0, 2, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1}};
  const Window m2 = {{0, 2, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 1}};
  const CoverMatrix a = embed_F(example22_P());
  const CoverMatrix b = embed_F(example22_Q());
  const CoverMatrix m = cover_lattice(a, b, LatticeOp::meet);
  o.require(matches(a, fp), "F(P) window");
  o.require(matches(b, fq), "F(Q) window");
  o.require(matches(m, m2), "M2 window");
  o.require(a.tail().is_identity() && a.limit(1) == 1 && a.tail_col0() == std::vector<Scalar>{Scalar{}},
            "F(P) tail descriptor");
  o.require(b.tail() == make_tail(2, {0, 1, 0, 1}) && b.limit(1) == 1, "F(Q) tail descriptor");
  o.require(m.tail() == make_tail(2, {0, 0, 0, 1}) && m.limit(1) == 1, "M2 tail descriptor");
  const auto cert = preimage_solve(m);
  const auto* inc = std::get_if<Inconsistent>(&cert.verdict);
  o.require(inc && inc->column == 0 && inc->values.first == 2 && inc->values.second == 1,
            "preimage of M2 is not Inconsistent with values (2, 1)");
  return o;
}

Outcome criterion2() {
  Outcome o;
  Rng rng(1002);
  for (int k = 0; k < 500 && o.ok; ++k) {
    const LMatrix a = random_lmatrix(rng);
    const auto cert = preimage_solve(embed_F(a));
    o.require(cert.has_preimage() && std::get<Preimage>(cert.verdict).matrix == a, "round trip failed on matrix " + std::to_string(k));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(1003);
  int positives = 0;
  for (int k = 0; k < 200 && o.ok; ++k) {
    const Shape s = random_shape(rng);
    const LMatrix a = k % 2 ? random_lmatrix(rng, s, -2, 3, 60) : random_near_positive(rng, s);
    const bool fast = lmat_is_positive(a).positive;
    positives += fast;
    o.require(fast == !oracle_positive_violation(a).has_value(), "disagreement on matrix " + std::to_string(k));
  }
  o.note = o.ok ? std::to_string(positives) + " of 200 positive" : o.note;
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(1004);
  int continuous = 0;
  for (int k = 0; k < 500 && o.ok; ++k) {
    LMatrix a = random_lmatrix(rng);
    if (k % 2 == 0) a = random_order_continuous(rng, random_shape(rng));
    const bool oc = lmat_is_order_continuous(a).order_continuous;
    continuous += oc;
    o.require(oc == in_band_B(embed_F(a)), "disagreement on matrix " + std::to_string(k));
  }
  o.note = o.ok ? std::to_string(continuous) + " of 500 order continuous" : o.note;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const GOperator t = build_T_example21();
  o.require(check_trislot_invariants(t, 50).all(), "slot invariants");
  o.require(gop_rowwise_check(t, RowwiseMode::positive).decision == Decision::holds, "T positive");
  o.require(gop_rowwise_check(t, RowwiseMode::order_continuous).decision == Decision::holds, "T order continuous");
  std::vector<LMatrix> candidates;
  for (const auto& c : hand_built_candidates()) candidates.push_back(c.s);
  Rng rng(1005);
  for (int k = 0; k < 30; ++k) {
    const Shape s = random_shape(rng);
    candidates.push_back(k % 2 ? random_near_positive(rng, s) : random_lmatrix(rng, s, 0, 4, 30));
  }
  for (const auto& s : candidates) {
    const auto r = refute_majorant(t, s);
    o.require(r.refuted && verify(r, t, s), "candidate not refuted");
  }
  for (std::size_t n = 1; n <= 50; ++n) o.require(verify(universal_certificate(t, n), t), "universal certificate");
  if (o.ok) o.note = std::to_string(candidates.size()) + " candidates refuted";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t n = 1; n <= 100; ++n) o.require(t_apply(EcSeq::unit(n)) == bump(n), "T(e^(n)) != x^(n)");
  Rng rng(1006);
  for (int k = 0; k < 1000; ++k) o.require(z_in_Z(t_apply(random_ec(rng, 8))), "T(x) outside Z");
  const auto fams = scripted_families();
  o.require(fams.size() >= 10, "fewer than 10 scripted families");
  for (const auto& f : fams) {
    const auto r = refute_oconvergence(f.terms);
    o.require(r.outcome != RefuterResult::Outcome::not_triggered && verify(r, f.terms), "family " + f.name);
    if (r.witness) {
      const auto& w = *r.witness;
      bool below = z_in_Z(w.omega) && !z_compare(w.omega, ZSeq{}).leq;
      for (const auto& z : f.terms) below = below && z_compare(w.omega, z).leq;
      o.require(below, "witness invariants for " + f.name);
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(1007);
  for (int k = 0; k < 1000 && o.ok; ++k) {
    const EcSeq a = random_ec(rng), b = random_ec(rng), c = random_ec(rng);
    o.require(EcSeq::parse(a.str()) == a, "canonical form");
    o.require(meet(a, b) == meet(b, a) && join(a, b) == join(b, a), "commutativity");
    o.require(meet(meet(a, b), c) == meet(a, meet(b, c)) && join(join(a, b), c) == join(a, join(b, c)),
              "associativity");
    o.require(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, "absorption");
    o.require(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)), "distributivity");
    const EcSeq d = a + abs(b);
    o.require(ec_compare(a, d).leq && meet(a, d) == a && join(a, d) == d, "order compatibility");
    const bool leq = ec_compare(a, b).leq;
    o.require(leq == (meet(a, b) == a) && leq == (join(a, b) == b), "order compatibility");
    o.require(disjoint(a, b) == disjoint_by_upper_sets(a, b), "disjointness");
    const EcSeq lo = EcSeq::pointwise(a, EcSeq::ones_from(3), [](const Scalar& x, const Scalar& m) { return m.is_zero() ? x : Scalar{}; });
    const EcSeq hi = EcSeq::pointwise(b, EcSeq::ones_from(3), [](const Scalar& x, const Scalar& m) { return m.is_zero() ? Scalar{} : x; });
    o.require(disjoint(lo, hi) && disjoint_by_upper_sets(lo, hi), "disjoint supports");
    o.require(basis_to_ec(ec_to_basis(a)) == a, "basis round trip");
    ZSeq z = random_z(rng), w = random_z(rng);
    z += ZSeq::unit(-1, (z.limit() - z.negative_weighted_sum()) * Scalar(2));
    w += ZSeq::unit(-1, (w.limit() - w.negative_weighted_sum()) * Scalar(2));
    o.require(z_in_Z(z) && z_in_Z(w) && z_in_Z(z + rng.rational(-3, 3) * w), "Z subspace");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const std::string id : {"18", "21", "22", "23"}) {
    std::ifstream in(std::string(PRERIESZ_GOLDEN) + "/example" + id + ".json", std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    cli::Command cmd;
    cmd.verb = cli::Verb::example;
    cmd.targets = {id};
    cmd.output = cli::OutputMode::structured;
    std::ostringstream out, err;
    o.require(in && cli::dispatch(cmd, out, err) == 0 && out.str() == golden.str(), "example " + id);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria = {
      {1, "golden reproduction of the meet counterexample", 1, criterion1},
      {2, "preimage round trip on 500 random matrices", 30, criterion2},
      {3, "positivity oracle equivalence on 200 random matrices", 0, criterion3},
      {4, "order continuity iff zero 0th column on 500 random matrices", 0, criterion4},
      {5, "triangular operator invariants, refutations and certificates", 10, criterion5},
      {6, "shift operator images, Z membership and refuter families", 10, criterion6},
      {7, "lattice and disjointness properties, 1000 cases each", 0, criterion7},
      {8, "structured example reports match committed fixtures", 0, criterion8},
  };
  bool all = true;
  for (const auto& [n, name, limit, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs >= limit) o.require(false, "over the " + std::to_string(static_cast<int>(limit)) + " s budget");
    all = all && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << name << " (" << secs << " s";
    if (!o.note.empty()) line << "; " << o.note;
    line << ")";
    std::cout << line.str() << '\n';
  }
  return all ? 0 : 1;
}
