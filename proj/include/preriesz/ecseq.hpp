#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "preriesz/scalar.hpp"

namespace preriesz {

/// An eventually constant real sequence (x_1, x_2, ...): finitely many
/// explicit values followed by a constant tail. Kept canonical (the last
/// prefix entry differs from the tail), so `==` is equality of sequences.
class EcSeq {
 public:
  EcSeq() = default;
  EcSeq(std::vector<Scalar> prefix, Scalar tail);

  static EcSeq constant(Scalar c);
  /// e_i: one at index i, zero elsewhere.
  static EcSeq unit(std::size_t i);
  /// Zero before index n, one from n on.
  static EcSeq ones_from(std::size_t n);

  const std::vector<Scalar>& prefix() const noexcept { return prefix_; }
  const Scalar& tail() const noexcept { return tail_; }

  /// Value at index n >= 1.
  Scalar at(std::size_t n) const;

  /// `ec: [v1, v2, ...] tail v`
  std::string str() const;
  static EcSeq parse(std::string_view text);

  EcSeq operator-() const;
  EcSeq& operator+=(const EcSeq& o);
  EcSeq& operator-=(const EcSeq& o);
  EcSeq& operator*=(const Scalar& c);
  friend EcSeq operator+(EcSeq a, const EcSeq& b) { return a += b; }
  friend EcSeq operator-(EcSeq a, const EcSeq& b) { return a -= b; }
  friend EcSeq operator*(EcSeq a, const Scalar& c) { return a *= c; }
  friend EcSeq operator*(const Scalar& c, EcSeq a) { return a *= c; }

  friend bool operator==(const EcSeq&, const EcSeq&) = default;

  /// Applies `f` index-wise to both sequences (including the tails).
  template <class F>
  static EcSeq pointwise(const EcSeq& a, const EcSeq& b, F&& f) {
    const std::size_t n = std::max(a.prefix_.size(), b.prefix_.size());
    std::vector<Scalar> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(f(a.at(i), b.at(i)));
    return EcSeq(std::move(out), f(a.tail_, b.tail_));
  }

 private:
  void canonicalize();

  std::vector<Scalar> prefix_;
  Scalar tail_;
};

EcSeq abs(const EcSeq& x);

struct OrderRelation {
  bool leq = false;
  bool geq = false;
};

enum class LatticeOp { meet, join };

/// Pointwise order, decided on the prefixes plus the tails.
OrderRelation ec_compare(const EcSeq& a, const EcSeq& b);
EcSeq ec_lattice(const EcSeq& a, const EcSeq& b, LatticeOp which);
inline EcSeq meet(const EcSeq& a, const EcSeq& b) { return ec_lattice(a, b, LatticeOp::meet); }
inline EcSeq join(const EcSeq& a, const EcSeq& b) { return ec_lattice(a, b, LatticeOp::join); }

/// |a| ∧ |b| = 0
bool disjoint(const EcSeq& a, const EcSeq& b);
/// Compares the upper-bound sets {a+b, -a-b}^u and {a-b, -a+b}^u. In a
/// vector lattice both sets are principal upper sets, of |a+b| and |a-b|.
bool disjoint_by_upper_sets(const EcSeq& a, const EcSeq& b);

/// Coordinates in the algebraic basis {1, e_1, e_2, ...}.
struct BasisCoords {
  Scalar lambda0;
  std::map<std::size_t, Scalar> lambdas;  ///< no zero values stored

  friend bool operator==(const BasisCoords&, const BasisCoords&) = default;
};

BasisCoords ec_to_basis(const EcSeq& x);
EcSeq basis_to_ec(const BasisCoords& c);

}  // namespace preriesz
