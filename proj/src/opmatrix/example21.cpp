#include "preriesz/example21.hpp"

#include "preriesz/family.hpp"
#include "preriesz/majorant.hpp"

namespace preriesz {

TriSlotInvariants check_trislot_invariants(const GOperator& t, std::size_t blocks) {
  TriSlotInvariants out;
  out.blocks = blocks;
  const std::size_t end = triangular(blocks);
  for (std::size_t p = 1; p <= end; ++p) {
    const auto row = t.row(p);
    if (row.size() != 1 || row.front().second != 1) out.partition = false;
    Scalar partial;
    std::size_t next = 0;
    for (std::size_t n = 1; n <= blocks; ++n) {
      while (next < row.size() && row[next].first <= n) partial += row[next++].second;
      if (partial > t.one_at(p)) out.partial_sums = false;
    }
  }
  for (std::size_t i = 1; i <= blocks; ++i) {
    if (t.e_limsup(i) != 1) out.limsup_one = false;
    for (std::size_t k = i; k <= blocks; ++k) {
      if (t.e_at(i, triangular(k - 1) + i) != 1) out.limsup_one = false;
    }
  }
  return out;
}

std::vector<MajorantCandidate> hand_built_candidates() {
  std::vector<MajorantCandidate> out;
  out.push_back({"identity", LMatrix::identity()});
  out.push_back({"5 * limit functional", LMatrix::limit_functional(5)});
  out.push_back({"1000 * limit functional", LMatrix::limit_functional(1000)});
  out.push_back({"P", LMatrix(1, 1, {{{0, 0}, Scalar(2)}, {{0, 1}, Scalar(1)}, {{1, 1}, Scalar(1)}},
                              BlockTail::identity())});
  out.push_back({"Q", LMatrix(1, 1, {{{0, 0}, Scalar(2)}, {{0, 1}, Scalar(1)}, {{1, 1}, Scalar(1)}},
                              make_tail(2, {Scalar(0), Scalar(1), Scalar(0), Scalar(1)}))});
  out.push_back({"zero", LMatrix::zero()});
  // lim S(e_i) = 1 for i ≤ 3 and lim S(𝟙) = 3: the basis comparison holds on
  // e_1..e_3, so the refutation has to come from e_4 or the chain.
  {
    std::map<Cell, Scalar> e{{{0, 0}, Scalar(3)}};
    for (std::size_t j = 1; j <= 3; ++j) e.emplace(Cell{0, j}, Scalar(1));
    out.push_back({"row 0 = (3, 1, 1, 1)", LMatrix(0, 3, std::move(e))});
  }
  // Generous column limits but too small a limit of S(𝟙): fails the summed link.
  {
    std::map<Cell, Scalar> e{{{0, 0}, Scalar(4)}};
    for (std::size_t j = 1; j <= 5; ++j) e.emplace(Cell{0, j}, Scalar(2));
    out.push_back({"row 0 = (4, 2, 2, 2, 2, 2)", LMatrix(0, 5, std::move(e))});
  }
  out.push_back({"identity + 7 * limit functional", LMatrix::identity() + LMatrix::limit_functional(7)});
  {
    std::map<Cell, Scalar> e{{{0, 0}, Scalar(10)}};
    for (std::size_t j = 1; j <= 10; ++j) e.emplace(Cell{0, j}, Scalar(1));
    out.push_back({"row 0 = (10, 1 x 10)", LMatrix(0, 10, std::move(e))});
  }
  out.push_back({"negative identity", -LMatrix::identity()});
  out.push_back({"block tail 2 [[1,1],[1,1]] + 3 * limit functional",
                 LMatrix(0, 0, {{{0, 0}, Scalar(3)}}, make_tail(2, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)}))});
  return out;
}

Report run_example21() {
  const GOperator t = build_T_example21();
  Report r;
  r.title = "Operator T on the triangular partition";
  constexpr std::size_t blocks = 50;
  const TriSlotInvariants inv = check_trislot_invariants(t, blocks);
  r.steps.push_back({"slot rule invariants", inv.all(),
                     "blocks k <= " + std::to_string(blocks) + ": partition " + (inv.partition ? "yes" : "no") +
                         ", limsup T(e_i) = 1 " + (inv.limsup_one ? "yes" : "no") + ", partial sums <= T(1) " +
                         (inv.partial_sums ? "yes" : "no"),
                     {{"T", t.str()}}});
  const RowwiseResult pos = gop_rowwise_check(t, RowwiseMode::positive);
  r.steps.push_back({"T positive", pos.decision == Decision::holds,
                     "T(e_i)(p) >= 0 and sum_i T(e_i)(p) <= T(1)(p) on positions 1.." +
                         std::to_string(pos.positions_checked) + ", which cover every row class",
                     {}});
  bool certs = true;
  for (std::size_t n = 1; n <= blocks; ++n) certs = certs && verify(universal_certificate(t, n), t);
  const MajorizationCertificate c3 = universal_certificate(t, 3);
  ReportStep uc{"universal chain", certs,
                "every majorant S in L_r(l_0^inf) has lim S(1) >= n; verified for n = 1.." + std::to_string(blocks),
                {}};
  for (std::size_t k = 0; k < c3.chain.size(); ++k) uc.data.emplace_back("n=3 link " + std::to_string(k + 1), c3.chain[k].statement);
  r.steps.push_back(std::move(uc));
  for (const auto& cand : hand_built_candidates()) {
    const MajorantRefutation ref = refute_majorant(t, cand.s);
    const bool ok = ref.refuted && verify(ref, t, cand.s);
    ReportStep s{"refute S = " + cand.name, ok, "", {{"S", cand.s.str()}}};
    if (ref.domination) {
      const auto& w = *ref.domination;
      s.detail = "S(" + w.element + ")(" + std::to_string(w.position) + ") = " + w.s_value.str() + " < T(" +
                 w.element + ")(" + std::to_string(w.position) + ") = " + w.t_value.str();
    } else if (ref.link_witness) {
      const auto& w = *ref.link_witness;
      s.detail = "chain link '" + ref.chain.chain[*ref.failing_link].statement + "' fails; (S - T)(" + w.element +
                 ")(" + std::to_string(w.position) + ") = " + (w.s_value - w.t_value).str() + " < 0";
    }
    s.data.emplace_back("n", std::to_string(ref.chain.n));
    r.steps.push_back(std::move(s));
  }
  r.verdict = r.all_passed() ? "T is positive and has no majorant in L_r(ℓ₀^∞)" : "certificate incomplete";
  return r;
}

Report run_example23() {
  const GOperator t = build_T_example21();
  Report r;
  r.title = "Order continuity of T";
  const RowwiseResult oc = gop_rowwise_check(t, RowwiseMode::order_continuous);
  r.steps.push_back({"T order continuous", oc.decision == Decision::holds,
                     "sum_i T(e_i)(p) = T(1)(p) on positions 1.." + std::to_string(oc.positions_checked) +
                         ", which cover every row class",
                     {{"T", t.str()}}});

  // y^(n) = 1 from n on decreases to 0; T(y^(n)) = T(1) − Σ_{i<n} T(e_i) is the
  // indicator of slots ≥ n, which decreases and vanishes at each fixed position.
  constexpr std::size_t terms = 12;
  const std::size_t positions = triangular(terms + 1);
  const auto ys = family_check(ones_from_family(terms));
  bool decreasing = true;
  bool vanishing = true;
  for (std::size_t p = 1; p <= positions; ++p) {
    Scalar prev = t.one_at(p);
    for (std::size_t n = 2; n <= terms + 1; ++n) {
      const Scalar cur = prev - t.e_at(n - 1, p);
      if (cur > prev || cur.sign() < 0) decreasing = false;
      prev = cur;
    }
    if (!prev.is_zero() && tri_slot(p) <= terms) vanishing = false;
  }
  r.steps.push_back({"decreasing net mapped to a decreasing net", ys.monotone && decreasing && vanishing,
                     "y^(n) decreases to 0 and T(y^(n)) decreases to 0 componentwise, n <= " +
                         std::to_string(terms + 1) + ", positions <= " + std::to_string(positions),
                     {}});
  bool certs = true;
  for (std::size_t n = 1; n <= 50; ++n) certs = certs && verify(universal_certificate(t, n), t);
  r.steps.push_back({"no order continuous majorant", certs,
                     "every positive S >= T on l_0^inf has lim S(1) >= n for n = 1..50, so none exists; in particular "
                     "none in the order continuous matrices",
                     {}});
  r.verdict = r.all_passed() ? "T ∈ L_oc(ℓ₀^∞, ℓ^∞) has no majorant in L_oc^◇(ℓ₀^∞)" : "certificate incomplete";
  return r;
}

}  // namespace preriesz
