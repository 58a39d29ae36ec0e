#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "preriesz/ecseq.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// A two-sided sequence (z_i)_{i∈ℤ} that is constant left of a finite core and
/// constant right of it. Stored densely: indices below `core_begin()` carry the
/// left tail, indices at or above `core_end()` the right tail. Canonical form
/// trims core entries equal to the adjacent tail; an empty core with distinct
/// tails keeps `core_begin()` as the switch index.
class ZSeq {
 public:
  ZSeq() = default;
  /// Keys between the smallest and largest key that are absent read as zero.
  ZSeq(const std::map<std::int64_t, Scalar>& core, Scalar left, Scalar right);

  static ZSeq dense(std::int64_t begin, std::vector<Scalar> values, Scalar left, Scalar right);
  static ZSeq constant(Scalar c);
  static ZSeq unit(std::int64_t i, Scalar v = 1);

  Scalar at(std::int64_t i) const;
  const Scalar& left_tail() const noexcept { return left_; }
  const Scalar& right_tail() const noexcept { return right_; }
  std::int64_t core_begin() const noexcept { return begin_; }
  std::int64_t core_end() const noexcept { return begin_ + static_cast<std::int64_t>(values_.size()); }
  const std::vector<Scalar>& core_values() const noexcept { return values_; }

  /// lim_{i→+∞} z_i
  const Scalar& limit() const noexcept { return right_; }
  /// Σ_{k≥1} z_{-k} / 2^k, exact: finitely many core terms plus left·2^{-K}.
  Scalar negative_weighted_sum() const;

  /// `zseq: {i:v, ...} left v right v`
  std::string str() const;
  static ZSeq parse(std::string_view text);

  ZSeq operator-() const;
  ZSeq& operator+=(const ZSeq& o);
  ZSeq& operator-=(const ZSeq& o);
  ZSeq& operator*=(const Scalar& c);
  friend ZSeq operator+(ZSeq a, const ZSeq& b) { return a += b; }
  friend ZSeq operator-(ZSeq a, const ZSeq& b) { return a -= b; }
  friend ZSeq operator*(const Scalar& c, ZSeq a) { return a *= c; }

  friend bool operator==(const ZSeq&, const ZSeq&) = default;

  template <class F>
  static ZSeq pointwise(const ZSeq& a, const ZSeq& b, F&& f) {
    const std::int64_t lo = std::min(a.core_begin(), b.core_begin());
    const std::int64_t hi = std::max(a.core_end(), b.core_end());
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t i = lo; i < hi; ++i) vals.push_back(f(a.at(i), b.at(i)));
    return dense(lo, std::move(vals), f(a.left_, b.left_), f(a.right_, b.right_));
  }

 private:
  void canonicalize();

  std::int64_t begin_ = 0;
  std::vector<Scalar> values_;
  Scalar left_;
  Scalar right_;
};

ZSeq abs(const ZSeq& z);
OrderRelation z_compare(const ZSeq& a, const ZSeq& b);
ZSeq z_lattice(const ZSeq& a, const ZSeq& b, LatticeOp which);

/// Membership in Z: the weighted negative-side sum equals the limit at +∞.
bool z_in_Z(const ZSeq& z);

/// Zero-extended embedding of an ℕ-indexed sequence into ℤ.
ZSeq embed_natural(const EcSeq& x);

}  // namespace preriesz
