#include "preriesz/example18.hpp"

#include <algorithm>

#include "preriesz/detail/rng.hpp"
#include "preriesz/error.hpp"
#include "preriesz/family.hpp"

namespace preriesz {

namespace {

/// Some index k with a(k) > b(k), scanning the cores and one tail point on each side.
std::optional<std::int64_t> first_excess(const ZSeq& a, const ZSeq& b) {
  const std::int64_t lo = std::min(a.core_begin(), b.core_begin()) - 1;
  const std::int64_t hi = std::max(a.core_end(), b.core_end());
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (a.at(k) > b.at(k)) return k;
  }
  return std::nullopt;
}

ZSeq image_of_unit(std::size_t n, ShiftOperator op) { return op == ShiftOperator::difference ? bump(n) : ZSeq{}; }

std::size_t effective_horizon(std::size_t horizon, std::size_t length) { return horizon == 0 ? 2 * length : horizon; }

RefuterResult failure(int check, std::size_t term, std::optional<std::int64_t> index, std::string detail) {
  RefuterResult r;
  r.outcome = RefuterResult::Outcome::check_failed;
  r.failed_check = check;
  r.term = term;
  r.index = index;
  r.detail = std::move(detail);
  return r;
}

ZSeq shift_image(const EcSeq& x, ShiftOperator op) {
  if (op == ShiftOperator::difference) return t_apply(x, ShiftPart::T);
  return t_apply(x, ShiftPart::T1) - t_apply(x, ShiftPart::T1);
}

}  // namespace

ZSeq t_apply(const EcSeq& x, ShiftPart which) {
  const ZSeq t1 = embed_natural(x);
  const ZSeq t2 = ZSeq::dense(2, x.prefix(), Scalar{}, x.tail());
  switch (which) {
    case ShiftPart::T1:
      return t1;
    case ShiftPart::T2:
      return t2;
    case ShiftPart::T:
      break;
  }
  return t1 - t2;
}

MembershipReport check_membership(const ZSeq& z, SpaceYZ space) {
  MembershipReport r;
  r.limit = z.limit();
  r.weighted_sum = z.negative_weighted_sum();
  r.member = space == SpaceYZ::Y || r.weighted_sum == r.limit;
  return r;
}

ZSeq bump(std::size_t n) {
  const auto i = static_cast<std::int64_t>(n);
  return ZSeq({{i, Scalar(1)}, {i + 1, Scalar(-1)}}, Scalar{}, Scalar{});
}

ObstructionWitness make_obstruction(std::size_t j, Scalar delta) {
  if (j == 0) throw InvariantError("obstruction index j must be positive");
  if (delta.sign() <= 0) throw InvariantError("obstruction needs delta > 0");
  const auto k = -static_cast<std::int64_t>(j);
  ZSeq omega({{k - 1, Scalar(-2) * delta}, {k, delta}}, Scalar{}, Scalar{});
  return {j, std::move(delta), std::move(omega)};
}

RefuterResult refute_oconvergence(const std::vector<ZSeq>& family, std::size_t horizon, ShiftOperator op) {
  if (family.empty()) throw InvariantError("refuter needs a nonempty family");
  horizon = effective_horizon(horizon, family.size());
  const std::size_t count = family.size();

  for (std::size_t n = 1; n <= count; ++n) {
    const ZSeq& z = family[n - 1];
    if (!z_in_Z(z)) {
      return failure(1, n, std::nullopt,
                     "weighted sum " + z.negative_weighted_sum().str() + " differs from the limit " + z.limit().str());
    }
  }
  for (std::size_t n = 1; n <= count; ++n) {
    const ZSeq& z = family[n - 1];
    const ZSeq x = image_of_unit(n, op);
    if (const auto k = first_excess(x, z)) {
      return failure(2, n, k, "x^(n) <= z^(n) fails: " + x.at(*k).str() + " > " + z.at(*k).str());
    }
    if (const auto k = first_excess(-x, z)) {
      return failure(2, n, k, "-x^(n) <= z^(n) fails: " + (-x.at(*k)).str() + " > " + z.at(*k).str());
    }
  }
  for (std::size_t n = 1; n < count; ++n) {
    if (const auto k = first_excess(family[n], family[n - 1])) {
      return failure(3, n + 1, k,
                     "family increases: " + family[n].at(*k).str() + " > " + family[n - 1].at(*k).str());
    }
  }

  const Scalar d = op == ShiftOperator::difference ? Scalar(1) : Scalar(0);
  if (d.is_zero()) {
    RefuterResult r;
    r.detail = "diagonal values x^(m)_m vanish, so nothing forces a positive lower bound";
    return r;
  }
  for (std::size_t n = 1; n <= count; ++n) {
    const ZSeq& z = family[n - 1];
    for (std::size_t m = n; m <= horizon; ++m) {
      const auto k = static_cast<std::int64_t>(m);
      if (z.at(k) < d) return failure(4, n, k, "z^(n)_m = " + z.at(k).str() + " < " + d.str() + " with m >= n");
    }
    if (z.limit() < d) return failure(4, n, std::nullopt, "lim z^(n) = " + z.limit().str() + " < " + d.str());
  }

  const ZSeq& last = family.back();
  const std::size_t reach = static_cast<std::size_t>(std::max<std::int64_t>(1, -last.core_begin())) + 1;
  for (std::size_t j = 1; j <= reach; ++j) {
    const Scalar delta = last.at(-static_cast<std::int64_t>(j));
    if (delta.sign() <= 0) continue;
    RefuterResult r;
    r.outcome = RefuterResult::Outcome::obstruction;
    r.witness = make_obstruction(j, delta);
    r.detail = "every z^(n) is at least " + delta.str() + " at index -" + std::to_string(j) +
               ", so omega <= z^(n) for all n while omega is not <= 0";
    return r;
  }
  throw InvariantError("weighted sum at least 1 yet no positive entry on the negative side");
}

bool verify(const RefuterResult& r, const std::vector<ZSeq>& family, std::size_t horizon, ShiftOperator op) {
  const std::size_t h = effective_horizon(horizon, family.size());
  switch (r.outcome) {
    case RefuterResult::Outcome::check_failed: {
      if (r.term == 0 || r.term > family.size()) return false;
      const ZSeq& z = family[r.term - 1];
      const ZSeq x = image_of_unit(r.term, op);
      bool claim = false;
      switch (r.failed_check) {
        case 1:
          claim = !z_in_Z(z);
          break;
        case 2:
          claim = r.index && (z.at(*r.index) < x.at(*r.index) || z.at(*r.index) < -x.at(*r.index));
          break;
        case 3:
          claim = r.term >= 2 && r.index && family[r.term - 1].at(*r.index) > family[r.term - 2].at(*r.index);
          break;
        case 4:
          if (r.index) {
            claim = *r.index >= static_cast<std::int64_t>(r.term) && *r.index <= static_cast<std::int64_t>(h) &&
                    z.at(*r.index) < 1;
          } else {
            claim = z.limit() < 1;
          }
          break;
        default:
          return false;
      }
      if (!claim) return false;
      break;
    }
    case RefuterResult::Outcome::obstruction: {
      if (!r.witness) return false;
      const ObstructionWitness& w = *r.witness;
      if (w.delta.sign() <= 0 || !(w.omega == make_obstruction(w.j, w.delta).omega)) return false;
      if (!z_in_Z(w.omega) || z_compare(w.omega, ZSeq{}).leq) return false;
      for (const auto& z : family) {
        if (!z_compare(w.omega, z).leq) return false;
      }
      break;
    }
    case RefuterResult::Outcome::not_triggered:
      if (op != ShiftOperator::zero) return false;
      break;
  }
  const RefuterResult again = refute_oconvergence(family, horizon, op);
  return again.outcome == r.outcome && again.failed_check == r.failed_check && again.term == r.term &&
         again.index == r.index;
}

std::vector<ScriptedFamily> scripted_families(std::size_t length) {
  using Outcome = RefuterResult::Outcome;
  const auto ones_from = [](std::int64_t n, Scalar left, std::int64_t zero_from = 0) {
    std::map<std::int64_t, Scalar> core;
    for (std::int64_t k = zero_from; k < n; ++k) core.emplace(k, Scalar{});
    core.emplace(n, Scalar(1));
    return ZSeq(core, std::move(left), Scalar(1));
  };
  const auto build = [&](auto term) {
    std::vector<ZSeq> out;
    for (std::size_t n = 1; n <= length; ++n) out.push_back(term(static_cast<std::int64_t>(n)));
    return out;
  };
  const auto with_negative_mass = [](std::int64_t n, std::map<std::int64_t, Scalar> negative) {
    for (std::int64_t k = 0; k < n; ++k) negative.emplace(k, Scalar{});
    negative.emplace(n, Scalar(1));
    return ZSeq(negative, Scalar{}, Scalar(1));
  };
  const auto top = static_cast<std::int64_t>(length) + 1;

  std::vector<ScriptedFamily> out;
  out.push_back({"bumps", build([](std::int64_t n) { return bump(static_cast<std::size_t>(n)); }),
                 Outcome::check_failed, 2});
  out.push_back({"ones from n, empty left side", build([&](std::int64_t n) { return ones_from(n, Scalar{}); }),
                 Outcome::check_failed, 1});
  out.push_back({"ones from n, left tail 1", build([&](std::int64_t n) { return ones_from(n, Scalar(1)); }),
                 Outcome::obstruction, 0});
  out.push_back({"mass 2 at -1", build([&](std::int64_t n) { return with_negative_mass(n, {{-1, Scalar(2)}}); }),
                 Outcome::obstruction, 0});
  out.push_back({"mass 8 at -3", build([&](std::int64_t n) { return with_negative_mass(n, {{-3, Scalar(8)}}); }),
                 Outcome::obstruction, 0});
  out.push_back({"alternating mass", build([&](std::int64_t n) {
                   return n % 2 == 1 ? with_negative_mass(n, {{-1, Scalar(2)}})
                                     : with_negative_mass(n, {{-2, Scalar(4)}});
                 }),
                 Outcome::check_failed, 3});
  out.push_back({"ones up to a cutoff, then 1/2", build([&](std::int64_t n) {
                   std::map<std::int64_t, Scalar> core;
                   for (std::int64_t k = 0; k < n; ++k) core.emplace(k, Scalar{});
                   for (std::int64_t k = n; k <= top; ++k) core.emplace(k, Scalar(1));
                   return ZSeq(core, Scalar(1, 2), Scalar(1, 2));
                 }),
                 Outcome::check_failed, 4});
  out.push_back({"ones from n+1, left tail 1", build([&](std::int64_t n) { return ones_from(n + 1, Scalar(1)); }),
                 Outcome::check_failed, 2});
  out.push_back({"negative entry at 0", build([&](std::int64_t n) {
                   std::map<std::int64_t, Scalar> core{{0, Scalar(-1)}};
                   for (std::int64_t k = 1; k < n; ++k) core.emplace(k, Scalar{});
                   core.emplace(n, Scalar(1));
                   return ZSeq(core, Scalar(1), Scalar(1));
                 }),
                 Outcome::check_failed, 2});
  out.push_back({"zero at -1, left tail 2", build([&](std::int64_t n) {
                   std::map<std::int64_t, Scalar> core{{-1, Scalar{}}};
                   for (std::int64_t k = 0; k < n; ++k) core.emplace(k, Scalar{});
                   core.emplace(n, Scalar(1));
                   return ZSeq(core, Scalar(2), Scalar(1));
                 }),
                 Outcome::obstruction, 0});
  out.push_back({"tails 1 + 1/n", build([&](std::int64_t n) {
                   const Scalar c = Scalar(1) + Scalar(1, n);
                   std::map<std::int64_t, Scalar> core;
                   for (std::int64_t k = 0; k < n; ++k) core.emplace(k, Scalar{});
                   core.emplace(n, c);
                   return ZSeq(core, c, c);
                 }),
                 Outcome::obstruction, 0});
  out.push_back({"zero family", build([](std::int64_t) { return ZSeq{}; }), Outcome::check_failed, 2});
  return out;
}

GOperator t1_operator() { return GOperator(EcSeq::constant(1), {}, BlockColumnRule{1, 1, BlockTail::identity()}); }

GOperator t2_operator() {
  return GOperator(EcSeq({Scalar{}}, Scalar(1)), {}, BlockColumnRule{2, 1, BlockTail::identity()});
}

Report run_example18(std::size_t horizon, ShiftOperator op) {
  const bool zero = op == ShiftOperator::zero;
  Report r;
  r.title = zero ? "Shift difference replaced by T1 - T1 = 0" : "Shift difference operator T = T1 - T2";

  {
    detail::Rng rng(18);
    constexpr std::size_t samples = 200;
    bool ok = true;
    for (std::size_t s = 0; s < samples && ok; ++s) {
      std::vector<Scalar> prefix(static_cast<std::size_t>(rng.integer(0, 6)));
      for (auto& v : prefix) v = rng.rational(-5, 5);
      const EcSeq x(std::move(prefix), rng.rational(-5, 5));
      const ZSeq image = shift_image(x, op);
      ok = z_in_Z(image) && (zero || image == t_apply(x, ShiftPart::T1) - t_apply(x, ShiftPart::T2));
    }
    r.steps.push_back({zero ? "images lie in Z" : "T = T1 - T2 and T(x) in Z", ok,
                       std::to_string(samples) + " sampled x, seed 18", {}});
  }
  {
    constexpr std::size_t count = 20;
    bool ok = true;
    for (std::size_t n = 1; n <= count && ok; ++n) ok = shift_image(EcSeq::unit(n), op) == image_of_unit(n, op);
    r.steps.push_back({zero ? "images of e^(n) vanish" : "T(e^(n)) = x^(n)", ok,
                       "n = 1.." + std::to_string(count), {{"x^(1)", image_of_unit(1, op).str()}}});
  }
  for (const auto& [name, t] : {std::pair{"T1", t1_operator()}, std::pair{"T2", t2_operator()}}) {
    const RowwiseResult pos = gop_rowwise_check(t, RowwiseMode::positive);
    const RowwiseResult oc = gop_rowwise_check(t, RowwiseMode::order_continuous);
    r.steps.push_back({std::string(name) + " positive and order continuous into Y",
                       pos.decision == Decision::holds && oc.decision == Decision::holds,
                       "componentwise criterion over positions 1.." + std::to_string(oc.positions_checked) +
                           "; rows at n <= 0 vanish",
                       {{name, t.str()}}});
  }
  {
    constexpr std::size_t count = 8;
    const auto ys = family_check(ones_from_family(count));
    bool dominated = true;
    for (std::size_t n = 1; n <= count && dominated; ++n) {
      const ZSeq y = embed_natural(EcSeq::ones_from(n));
      const ZSeq x = image_of_unit(n, op);
      dominated = z_compare(x, y).leq && z_compare(-x, y).leq;
    }
    r.steps.push_back({"x^(n) order converges to 0 in Y",
                       ys.monotone && ys.componentwise_limit == EcSeq{} && dominated,
                       "+-x^(n) <= y^(n) and y^(n) decreases componentwise to 0, n = 1.." + std::to_string(count),
                       {}});
  }

  bool all_rejected = true;
  if (zero) {
    const std::vector<ZSeq> fam(6, ZSeq{});
    const RefuterResult res = refute_oconvergence(fam, horizon, op);
    const bool ok = res.outcome == RefuterResult::Outcome::not_triggered && verify(res, fam, horizon, op);
    r.steps.push_back({"refuter on the zero family", ok, res.detail, {}});
    r.verdict = ok ? "refuter not triggered; zero operator trivially order continuous" : "refuter misbehaved";
    return r;
  }
  for (const auto& fam : scripted_families()) {
    const RefuterResult res = refute_oconvergence(fam.terms, horizon, op);
    const bool rejected = res.outcome != RefuterResult::Outcome::not_triggered && verify(res, fam.terms, horizon, op);
    all_rejected = all_rejected && rejected;
    ReportStep s{"refuter: " + fam.name, rejected, "", {}};
    if (res.outcome == RefuterResult::Outcome::obstruction) {
      s.detail = "obstruction: " + res.detail;
      s.data = {{"j", std::to_string(res.witness->j)}, {"delta", res.witness->delta.str()},
                {"omega", res.witness->omega.str()}};
    } else {
      s.detail = "check (" + std::to_string(res.failed_check) + ") fails at term " + std::to_string(res.term) + ": " +
                 res.detail;
    }
    r.steps.push_back(std::move(s));
  }
  r.verdict = r.all_passed() && all_rejected ? "T ∈ L_oc(X, Y) evidence passes; T ∉ L_oc(X, Z) obstruction reproduced"
                                             : "certificate incomplete";
  return r;
}

}  // namespace preriesz
