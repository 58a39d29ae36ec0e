#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "preriesz/block_tail.hpp"
#include "preriesz/ecseq.hpp"
#include "preriesz/lmatrix.hpp"
#include "preriesz/report.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// Element of the cover Y: an ℕ×ℕ₀ matrix. Explicit entries live on rows
/// 1..R, columns 0..C. A tail row i > R reads
///   column 0:      col0[(i − R − 1) mod q]
///   column j ≤ C:  the column limit β_j
///   column j > C:  the periodic block tail anchored at (R+1, C+1).
/// Explicit rows are zero beyond column C.
class CoverMatrix {
 public:
  CoverMatrix() = default;
  CoverMatrix(std::size_t rows, std::size_t cols, std::map<Cell, Scalar> entries, std::map<std::size_t, Scalar> limits,
              BlockTail tail = {}, std::vector<Scalar> tail_col0 = {Scalar{}});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::map<Cell, Scalar>& explicit_entries() const noexcept { return entries_; }
  const std::map<std::size_t, Scalar>& limits() const noexcept { return limits_; }
  const BlockTail& tail() const noexcept { return tail_; }
  /// Minimal cycle of column 0 below the window.
  const std::vector<Scalar>& tail_col0() const noexcept { return col0_; }

  Scalar limit(std::size_t j) const;
  /// b_ij for i ≥ 1.
  Scalar entry(std::size_t i, std::size_t j) const;
  /// Nonzero entries of row i ≥ 1, column 0 included, in column order.
  std::vector<std::pair<std::size_t, Scalar>> row(std::size_t i) const;
  /// Σ_{j≥1} b_ij
  Scalar row_sum_from_one(std::size_t i) const;
  /// Rows past the window repeat with this period.
  std::size_t row_period() const;
  /// One past the last row needed to see every distinct row.
  std::size_t representative_rows_end() const { return rows_ + row_period(); }

  std::string str() const;
  static CoverMatrix parse(std::string_view text);

  CoverMatrix operator-() const;
  friend CoverMatrix operator+(const CoverMatrix& a, const CoverMatrix& b);
  friend CoverMatrix operator-(const CoverMatrix& a, const CoverMatrix& b) { return a + (-b); }
  friend CoverMatrix operator*(const Scalar& c, const CoverMatrix& a);

  /// Equality of the represented matrices.
  friend bool operator==(const CoverMatrix& a, const CoverMatrix& b);

  friend CoverMatrix cover_lattice(const CoverMatrix& a, const CoverMatrix& b, LatticeOp which);
  friend CoverMatrix abs(const CoverMatrix& b);

 private:
  template <class Op>
  friend CoverMatrix combine(const CoverMatrix& a, const CoverMatrix& b, Op op);
  CoverMatrix reframed(std::size_t rows, std::size_t cols, std::size_t period) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Cell, Scalar> entries_;
  std::map<std::size_t, Scalar> limits_;
  BlockTail tail_;
  std::vector<Scalar> col0_{Scalar{}};
};

CoverMatrix cover_lattice(const CoverMatrix& a, const CoverMatrix& b, LatticeOp which);
CoverMatrix abs(const CoverMatrix& b);
/// Entrywise a ≤ b.
bool cover_leq(const CoverMatrix& a, const CoverMatrix& b);

/// Conditions (a)-(d) defining Y, with the exact quantities behind them.
struct CoverConditions {
  bool columns_eventually_constant = true;  ///< (a)
  bool limits_summable = true;              ///< (b)
  bool column0_bounded = true;              ///< (c)
  bool row_sums_bounded = true;             ///< (d)
  Scalar limits_abs_sum;
  Scalar column0_sup;
  Scalar row_abs_sup;

  bool all() const { return columns_eventually_constant && limits_summable && column0_bounded && row_sums_bounded; }
};
CoverConditions cover_conditions(const CoverMatrix& b);

/// A matrix on ℕ₀×ℕ₀ kept as its 0th row plus the rows below it, which have
/// the shape of a cover element. Intermediate object of the steps of F.
struct RowSplitMatrix {
  std::map<std::size_t, Scalar> row0;  ///< no zero values stored
  CoverMatrix body;
};

/// (I) add the 0th row onto each other row.
RowSplitMatrix step_add_row0(const LMatrix& a);
/// (II) delete the 0th row.
CoverMatrix step_drop_row0(const RowSplitMatrix& m);
/// (III) replace b_i0 by b_i0 − Σ_{j≥1} b_ij in every row.
CoverMatrix step_balance_col0(const CoverMatrix& m);
/// Reverse of (III): b_i0 + Σ_{j≥1} b_ij.
CoverMatrix unstep_balance_col0(const CoverMatrix& b);
/// Reverse of (II): prepend a 0th row.
RowSplitMatrix unstep_drop_row0(const CoverMatrix& body, std::map<std::size_t, Scalar> row0);
/// Reverse of (I): subtract the 0th row from every other row.
LMatrix unstep_add_row0(const RowSplitMatrix& m);

/// F = (III) ∘ (II) ∘ (I). Throws RepresentationError for non-regular input.
CoverMatrix embed_F(const LMatrix& a);

struct Preimage {
  LMatrix matrix;
};

/// Column `column` of M₁ must stabilise at the 0th-row entry of any preimage,
/// yet rows N and N+1 (and every shift by `period`) demand different values.
struct Inconsistent {
  std::size_t column = 0;
  std::pair<std::size_t, std::size_t> witness_rows;
  std::pair<Scalar, Scalar> values;
  std::size_t period = 1;
};

struct PreimageCertificate {
  std::variant<Preimage, Inconsistent> verdict;
  CoverMatrix m1;  ///< reverse (III) applied to the input

  bool has_preimage() const { return std::holds_alternative<Preimage>(verdict); }
};

PreimageCertificate preimage_solve(const CoverMatrix& b);

/// b_i0 = 0 for every i.
bool in_band_B(const CoverMatrix& b);

enum class Membership { member, not_member, unknown };

struct YocResult {
  Membership membership = Membership::unknown;
  std::optional<LMatrix> witness;  ///< A ∈ 𝓝 with |B| ≤ F(A)
  std::string reason;
};

/// Y_oc = {B ∈ Y : |B| ≤ F(A) for some A ∈ 𝓝}. A supplied witness that does
/// not dominate gives `unknown`; without one the dominating A is constructed.
YocResult in_Yoc(const CoverMatrix& b, const std::optional<LMatrix>& witness = std::nullopt);

/// The matrices P and Q whose meet in the cover has no preimage in 𝓝.
LMatrix example22_P();
LMatrix example22_Q();

/// F(P) ∧ F(Q) pipeline with its full certificate.
Report run_meet_counterexample(const LMatrix& p, const LMatrix& q);

}  // namespace preriesz
