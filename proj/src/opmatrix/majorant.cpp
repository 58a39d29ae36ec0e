#include "preriesz/majorant.hpp"

#include <algorithm>

#include "preriesz/error.hpp"

namespace preriesz {

namespace {

std::string e_name(std::size_t i) { return "e_" + std::to_string(i); }

std::string combination_name(std::size_t n) {
  if (n == 1) return "1 - e_1";
  return "1 - e_1 - ... - e_" + std::to_string(n);
}

/// Positions far enough out that S(x) has reached its tail and every row class
/// of T has appeared, for x among 𝟙, e_1, ..., e_i.
std::size_t search_bound(const GOperator& t, const LMatrix& s, std::size_t i) {
  const std::size_t reach = std::max(i, s.rows() + s.cols() + s.tail().period());
  return rowwise_horizon(t) + triangular(reach + 2);
}

Scalar t_value(const GOperator& t, std::size_t basis, bool combination, std::size_t p) {
  if (!combination) return basis == 0 ? t.one_at(p) : t.e_at(basis, p);
  Scalar v = t.one_at(p);
  for (std::size_t i = 1; i <= basis; ++i) v -= t.e_at(i, p);
  return v;
}

EcSeq s_image(const LMatrix& s, std::size_t basis, bool combination) {
  if (!combination) return lmat_apply(s, basis == 0 ? EcSeq::constant(1) : EcSeq::unit(basis));
  EcSeq x = EcSeq::constant(1);
  for (std::size_t i = 1; i <= basis; ++i) x -= EcSeq::unit(i);
  return lmat_apply(s, x);
}

std::optional<DominationWitness> first_violation(const GOperator& t, const LMatrix& s, std::size_t basis,
                                                 bool combination) {
  const EcSeq image = s_image(s, basis, combination);
  const std::size_t bound = search_bound(t, s, basis);
  for (std::size_t p = 1; p <= bound; ++p) {
    Scalar sv = image.at(p);
    Scalar tv = t_value(t, basis, combination, p);
    if (sv < tv) {
      const std::string name = combination ? combination_name(basis) : (basis == 0 ? "1" : e_name(basis));
      return DominationWitness{name, basis, p, std::move(sv), std::move(tv)};
    }
  }
  return std::nullopt;
}

struct ConcreteChain {
  MajorizationCertificate cert;
  bool closed = false;
};

ConcreteChain concrete_chain(const GOperator& t, const LMatrix& s, std::size_t max_n) {
  ConcreteChain out;
  const Scalar lim_one = s.entry(0, 0);
  Scalar forced;
  std::size_t n = 0;
  while (n < max_n && forced <= lim_one) {
    ++n;
    forced += t.e_limsup(n);
  }
  if (forced <= lim_one) return out;
  out.closed = true;
  auto& cert = out.cert;
  cert.n = n;
  Scalar lim_sum;
  for (std::size_t i = 1; i <= n; ++i) {
    const Scalar lim_e = s.entry(0, i);
    cert.chain.push_back({"limsup T(e_" + std::to_string(i) + ") <= lim S(e_" + std::to_string(i) + ")",
                          t.e_limsup(i), lim_e, false});
    lim_sum += lim_e;
  }
  cert.chain.push_back({"sum_{i<=" + std::to_string(n) + "} lim S(e_i) <= lim S(1)", lim_sum, lim_one, false});
  cert.chain.push_back({"lim S(1) < sum_{i<=" + std::to_string(n) + "} limsup T(e_i)", lim_one, forced, true});
  cert.conclusion = forced;
  return out;
}

}  // namespace

MajorizationCertificate universal_certificate(const GOperator& t, std::size_t n) {
  MajorizationCertificate cert;
  cert.n = n;
  Scalar sum;
  for (std::size_t i = 1; i <= n; ++i) {
    const Scalar ls = t.e_limsup(i);
    cert.chain.push_back({"lim S(e_" + std::to_string(i) + ") >= limsup T(e_" + std::to_string(i) + ") = " + ls.str() +
                              " >= 1",
                          Scalar(1), ls, false});
    sum += ls;
  }
  cert.chain.push_back({"n = " + std::to_string(n) + " <= sum_{i<=n} limsup T(e_i) <= sum_{i<=n} lim S(e_i) <= lim S(1)",
                        Scalar(n), sum, false});
  cert.conclusion = sum;
  return cert;
}

bool verify(const MajorizationCertificate& cert, const GOperator& t) {
  // The step Σ lim S(e_i) ≤ lim S(𝟙) needs S positive, which S ≥ T ≥ 0 provides.
  if (gop_rowwise_check(t, RowwiseMode::positive).decision != Decision::holds) return false;
  if (cert.chain.size() != cert.n + 1) return false;
  Scalar sum;
  for (std::size_t i = 1; i <= cert.n; ++i) {
    const ChainLink& link = cert.chain[i - 1];
    const Scalar ls = t.e_limsup(i);
    if (link.lhs != 1 || link.rhs != ls || !link.holds()) return false;
    sum += ls;
  }
  const ChainLink& last = cert.chain.back();
  return last.lhs == Scalar(cert.n) && last.rhs == sum && last.holds() && cert.conclusion == sum &&
         cert.conclusion >= Scalar(cert.n);
}

MajorantRefutation refute_majorant(const GOperator& t, const LMatrix& s, std::size_t max_n) {
  MajorantRefutation out;
  ConcreteChain cc = concrete_chain(t, s, max_n);
  out.chain = std::move(cc.cert);
  const std::size_t n = cc.closed ? out.chain.n : max_n;

  for (std::size_t b = 0; b <= n && !out.domination; ++b) out.domination = first_violation(t, s, b, false);

  if (cc.closed) {
    for (std::size_t k = 0; k < out.chain.chain.size(); ++k) {
      if (!out.chain.chain[k].holds()) {
        out.failing_link = k;
        break;
      }
    }
    if (!out.failing_link) throw InvariantError("forced chain closed without a failing link");
    const std::size_t k = *out.failing_link;
    if (k < n) {
      out.link_witness = first_violation(t, s, k + 1, false);
    } else {
      out.link_witness = first_violation(t, s, n, true);
    }
  } else {
    out.note = "limsup T(e_i) does not accumulate past lim S(1) within " + std::to_string(max_n) + " columns";
  }
  out.refuted = out.domination.has_value() || out.link_witness.has_value();
  return out;
}

bool verify(const MajorantRefutation& r, const GOperator& t, const LMatrix& s) {
  const auto check_witness = [&](const DominationWitness& w, bool combination) {
    const Scalar sv = s_image(s, w.basis, combination).at(w.position);
    const Scalar tv = t_value(t, w.basis, combination, w.position);
    return w.position >= 1 && sv == w.s_value && tv == w.t_value && sv < tv;
  };
  if (r.domination && !check_witness(*r.domination, false)) return false;
  if (r.chain.n != 0) {
    const ConcreteChain cc = concrete_chain(t, s, r.chain.n);
    if (!cc.closed) return false;
    if (cc.cert.n != r.chain.n || cc.cert.conclusion != r.chain.conclusion) return false;
    if (cc.cert.chain.size() != r.chain.chain.size()) return false;
    for (std::size_t k = 0; k < cc.cert.chain.size(); ++k) {
      const auto& a = cc.cert.chain[k];
      const auto& b = r.chain.chain[k];
      if (a.lhs != b.lhs || a.rhs != b.rhs || a.strict != b.strict || a.holds() != b.holds()) return false;
    }
    if (!r.failing_link || r.chain.chain[*r.failing_link].holds()) return false;
    if (r.link_witness) {
      const bool combination = *r.failing_link == r.chain.n;
      if (!check_witness(*r.link_witness, combination)) return false;
    }
  }
  return r.refuted == (r.domination.has_value() || r.link_witness.has_value());
}

}  // namespace preriesz
