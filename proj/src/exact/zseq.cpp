#include "preriesz/zseq.hpp"

#include <sstream>

#include "preriesz/detail/cursor.hpp"
#include "preriesz/error.hpp"

namespace preriesz {

ZSeq::ZSeq(const std::map<std::int64_t, Scalar>& core, Scalar left, Scalar right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!core.empty()) {
    begin_ = core.begin()->first;
    const std::int64_t last = core.rbegin()->first;
    values_.assign(static_cast<std::size_t>(last - begin_ + 1), Scalar{});
    for (const auto& [i, v] : core) values_[static_cast<std::size_t>(i - begin_)] = v;
  } else if (left_ != right_) {
    throw InvariantError("a ZSeq with distinct tails needs at least one core key to anchor the switch");
  }
  canonicalize();
}

ZSeq ZSeq::dense(std::int64_t begin, std::vector<Scalar> values, Scalar left, Scalar right) {
  ZSeq z;
  z.begin_ = begin;
  z.values_ = std::move(values);
  z.left_ = std::move(left);
  z.right_ = std::move(right);
  z.canonicalize();
  return z;
}

ZSeq ZSeq::constant(Scalar c) { return dense(0, {}, c, c); }

ZSeq ZSeq::unit(std::int64_t i, Scalar v) { return dense(i, {std::move(v)}, 0, 0); }

void ZSeq::canonicalize() {
  while (!values_.empty() && values_.back() == right_) values_.pop_back();
  std::size_t lead = 0;
  while (lead < values_.size() && values_[lead] == left_) ++lead;
  if (lead) {
    values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(lead));
    begin_ += static_cast<std::int64_t>(lead);
  }
  if (values_.empty() && left_ == right_) begin_ = 0;
}

Scalar ZSeq::at(std::int64_t i) const {
  if (i < begin_) return left_;
  if (i >= core_end()) return right_;
  return values_[static_cast<std::size_t>(i - begin_)];
}

Scalar ZSeq::negative_weighted_sum() const {
  // Indices -k with -k >= begin_ are evaluated one by one; all further ones
  // carry the left tail and contribute left · Σ_{k>K} 2^{-k} = left · 2^{-K}.
  const std::int64_t explicit_terms = std::max<std::int64_t>(0, -begin_);
  Scalar sum;
  for (std::int64_t k = 1; k <= explicit_terms; ++k) {
    sum += at(-k) * inverse_power_of_two(static_cast<std::size_t>(k));
  }
  sum += left_ * inverse_power_of_two(static_cast<std::size_t>(explicit_terms));
  return sum;
}

std::string ZSeq::str() const {
  std::ostringstream os;
  os << "zseq: {";
  if (values_.empty()) {
    if (left_ != right_) os << begin_ << ':' << right_;
  } else {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (k) os << ", ";
      os << begin_ + static_cast<std::int64_t>(k) << ':' << values_[k];
    }
  }
  os << "} left " << left_ << " right " << right_;
  return os.str();
}

ZSeq ZSeq::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect_word("zseq:");
  cur.expect('{');
  std::map<std::int64_t, Scalar> core;
  if (!cur.consume('}')) {
    do {
      const auto i = cur.integer();
      cur.expect(':');
      if (!core.emplace(i, cur.scalar()).second) cur.fail("duplicate index " + std::to_string(i));
    } while (cur.consume(','));
    cur.expect('}');
  }
  cur.expect_word("left");
  Scalar left = cur.scalar();
  cur.expect_word("right");
  Scalar right = cur.scalar();
  if (!cur.at_end()) cur.fail("trailing characters");
  if (core.empty() && left != right) cur.fail("distinct tails need an anchoring core entry");
  return ZSeq(core, std::move(left), std::move(right));
}

ZSeq ZSeq::operator-() const {
  ZSeq r = *this;
  for (auto& v : r.values_) v = -v;
  r.left_ = -r.left_;
  r.right_ = -r.right_;
  return r;
}

ZSeq& ZSeq::operator+=(const ZSeq& o) {
  return *this = pointwise(*this, o, [](const Scalar& a, const Scalar& b) { return a + b; });
}

ZSeq& ZSeq::operator-=(const ZSeq& o) {
  return *this = pointwise(*this, o, [](const Scalar& a, const Scalar& b) { return a - b; });
}

ZSeq& ZSeq::operator*=(const Scalar& c) {
  for (auto& v : values_) v *= c;
  left_ *= c;
  right_ *= c;
  canonicalize();
  return *this;
}

ZSeq abs(const ZSeq& z) {
  return ZSeq::pointwise(z, z, [](const Scalar& a, const Scalar&) { return a.abs(); });
}

OrderRelation z_compare(const ZSeq& a, const ZSeq& b) {
  OrderRelation r{true, true};
  const std::int64_t lo = std::min(a.core_begin(), b.core_begin()) - 1;
  const std::int64_t hi = std::max(a.core_end(), b.core_end());
  for (std::int64_t i = lo; i <= hi; ++i) {
    const auto c = a.at(i) <=> b.at(i);
    if (c > 0) r.leq = false;
    if (c < 0) r.geq = false;
  }
  return r;
}

ZSeq z_lattice(const ZSeq& a, const ZSeq& b, LatticeOp which) {
  if (which == LatticeOp::meet) {
    return ZSeq::pointwise(a, b, [](const Scalar& x, const Scalar& y) { return min(x, y); });
  }
  return ZSeq::pointwise(a, b, [](const Scalar& x, const Scalar& y) { return max(x, y); });
}

bool z_in_Z(const ZSeq& z) { return z.negative_weighted_sum() == z.limit(); }

ZSeq embed_natural(const EcSeq& x) {
  return ZSeq::dense(1, x.prefix(), 0, x.tail());
}

}  // namespace preriesz
