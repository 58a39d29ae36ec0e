#include "preriesz/family.hpp"

#include "preriesz/error.hpp"

namespace preriesz {

namespace {

bool respects(const Scalar& earlier, const Scalar& later, Direction d) {
  return d == Direction::decreasing ? later <= earlier : later >= earlier;
}

std::optional<std::int64_t> first_bad_component(const EcSeq& a, const EcSeq& b, Direction d) {
  const std::size_t n = std::max(a.prefix().size(), b.prefix().size());
  for (std::size_t i = 1; i <= n + 1; ++i) {
    if (!respects(a.at(i), b.at(i), d)) return static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

std::optional<std::int64_t> first_bad_component(const ZSeq& a, const ZSeq& b, Direction d) {
  const std::int64_t lo = std::min(a.core_begin(), b.core_begin()) - 1;
  const std::int64_t hi = std::max(a.core_end(), b.core_end());
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (!respects(a.at(i), b.at(i), d)) return i;
  }
  return std::nullopt;
}

template <class Seq>
FamilyReport<Seq> check_impl(const MonotoneFamily<Seq>& f) {
  if (f.terms.empty()) throw InvariantError("family_check needs at least one term");
  FamilyReport<Seq> r;
  r.monotone = true;
  for (std::size_t k = 0; k + 1 < f.terms.size(); ++k) {
    if (auto c = first_bad_component(f.terms[k], f.terms[k + 1], f.direction)) {
      r.monotone = false;
      r.violation = MonotonicityViolation{k + 1, k + 2, *c};
      break;
    }
  }
  r.final_term = f.terms.back();
  // Both closed-form rules move their support to +∞, so every fixed
  // component is eventually zero.
  r.componentwise_limit = f.rule ? Seq{} : f.terms.back();
  return r;
}

}  // namespace

FamilyReport<EcSeq> family_check(const MonotoneFamily<EcSeq>& f) { return check_impl(f); }
FamilyReport<ZSeq> family_check(const MonotoneFamily<ZSeq>& f) { return check_impl(f); }

MonotoneFamily<EcSeq> ones_from_family(std::size_t n) {
  MonotoneFamily<EcSeq> f{{}, Direction::decreasing, FamilyRule::ones_from_index};
  for (std::size_t k = 1; k <= n; ++k) f.terms.push_back(EcSeq::ones_from(k));
  return f;
}

MonotoneFamily<EcSeq> unit_family(std::size_t n, Direction declared) {
  MonotoneFamily<EcSeq> f{{}, declared, FamilyRule::bump_at_index};
  for (std::size_t k = 1; k <= n; ++k) f.terms.push_back(EcSeq::unit(k));
  return f;
}

MonotoneFamily<ZSeq> bump_family(std::size_t n, Direction declared) {
  MonotoneFamily<ZSeq> f{{}, declared, FamilyRule::bump_at_index};
  for (std::size_t k = 1; k <= n; ++k) {
    f.terms.push_back(ZSeq::dense(static_cast<std::int64_t>(k), {1, -1}, 0, 0));
  }
  return f;
}

}  // namespace preriesz
