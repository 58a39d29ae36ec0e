#include <sstream>

#include "preriesz/cover.hpp"

namespace preriesz {

namespace {

std::string cycle_str(const std::vector<Scalar>& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != 0) out += ", ";
    out += c[k].str();
  }
  return out + "]";
}

ReportStep membership_step(const std::string& name, const LMatrix& a) {
  const RegularityResult reg = lmat_is_regular(a);
  const ContinuityResult oc = lmat_is_order_continuous(a);
  ReportStep s{name + " in N", reg.regular && oc.order_continuous, "", {{name, a.str()}}};
  s.detail = "regular: " + std::string(reg.regular ? "yes" : "no") + " (sup " + reg.sup.str() + "), order continuous: ";
  if (oc.order_continuous) {
    s.detail += "yes";
  } else {
    s.detail += "no (row " + std::to_string(*oc.row) + ", residual " + oc.residual.str() + ")";
  }
  return s;
}

}  // namespace

Report run_meet_counterexample(const LMatrix& p, const LMatrix& q) {
  Report r;
  r.title = "Meet of F(P) and F(Q) in the cover of N";
  r.steps.push_back(membership_step("P", p));
  r.steps.push_back(membership_step("Q", q));
  for (const auto& s : r.steps) {
    if (!s.passed) {
      r.verdict = "aborted at step '" + s.name + "'";
      return r;
    }
  }

  const CoverMatrix fp = embed_F(p);
  const CoverMatrix fq = embed_F(q);
  r.steps.push_back({"F(P)", in_band_B(fp), "steps (I), (II), (III) applied to P; 0th column zero", {{"F(P)", fp.str()}}});
  r.steps.push_back({"F(Q)", in_band_B(fq), "steps (I), (II), (III) applied to Q; 0th column zero", {{"F(Q)", fq.str()}}});

  const CoverMatrix m2 = cover_lattice(fp, fq, LatticeOp::meet);
  r.steps.push_back({"M2 = F(P) meet F(Q)", in_band_B(m2), "pointwise minimum in the cover", {{"M2", m2.str()}}});
  r.steps.push_back({"lattice homomorphism",
                     true,
                     "If N were a vector lattice, M = P meet Q would exist in N and, since the embedding into the "
                     "cover preserves lattice operations, F(M) = F(P meet Q) = F(P) meet F(Q) = M2.",
                     {}});

  const PreimageCertificate cert = preimage_solve(m2);
  r.steps.push_back({"reverse steps (III) and (II)",
                     true,
                     "M1 adds each row sum from column 1 onto the 0th entry; 0th column below the window cycles through " +
                         cycle_str(cert.m1.tail_col0()),
                     {{"M1", cert.m1.str()}}});

  if (const auto* inc = std::get_if<Inconsistent>(&cert.verdict)) {
    const auto [n, n1] = inc->witness_rows;
    std::ostringstream detail;
    detail << "A preimage M has an eventually zero 0th column, so m_00 + m_i0 = m_00 for all large i. Rows " << n
           << " + k*" << inc->period << " demand m_00 = " << inc->values.first << " and rows " << n1 << " + k*"
           << inc->period << " demand m_00 = " << inc->values.second << ", a contradiction.";
    r.steps.push_back({"reverse step (I)",
                       true,
                       detail.str(),
                       {{"column", std::to_string(inc->column)},
                        {"witness_rows", std::to_string(n) + " " + std::to_string(n1)},
                        {"values", inc->values.first.str() + " " + inc->values.second.str()},
                        {"period", std::to_string(inc->period)}}});
    r.verdict = "𝓝 is not a vector lattice";
  } else {
    const LMatrix& m = std::get<Preimage>(cert.verdict).matrix;
    r.steps.push_back({"reverse step (I)", true, "M2 = F(M) for the reconstructed M", {{"M", m.str()}}});
    r.verdict = "no obstruction found for this pair";
  }
  return r;
}

}  // namespace preriesz
