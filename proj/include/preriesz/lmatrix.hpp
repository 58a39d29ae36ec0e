#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "preriesz/block_tail.hpp"
#include "preriesz/ecseq.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// Finitely supported vector on ℕ₀ in f-coordinates: index 0 is the
/// coefficient of 𝟙, index i ≥ 1 that of e_i.
struct KVector {
  std::map<std::size_t, Scalar> coords;  ///< no zero values stored

  Scalar at(std::size_t i) const;
  static KVector from_ec(const EcSeq& x);
  EcSeq to_ec() const;

  friend bool operator==(const KVector&, const KVector&) = default;
};

/// x₀ ≥ 0 and x₀ + x_i ≥ 0 for every i.
bool k_member(const KVector& x);

using Cell = std::pair<std::size_t, std::size_t>;

/// Column-finite ℕ₀×ℕ₀ matrix: explicit entries inside the window [0,R]×[0,C]
/// and a periodic block-diagonal tail anchored at (R+1, C+1). Everything else
/// is zero.
class LMatrix {
 public:
  LMatrix() = default;  ///< zero matrix on the window [0,0]×[0,0]
  LMatrix(std::size_t rows, std::size_t cols, std::map<Cell, Scalar> entries, BlockTail tail = {});

  static LMatrix zero() { return {}; }
  static LMatrix identity();
  /// x ↦ c·(lim x)·𝟙, i.e. a₀₀ = c and nothing else.
  static LMatrix limit_functional(Scalar c);

  std::size_t rows() const noexcept { return rows_; }  ///< R
  std::size_t cols() const noexcept { return cols_; }  ///< C
  const std::map<Cell, Scalar>& explicit_entries() const noexcept { return entries_; }
  const BlockTail& tail() const noexcept { return tail_; }
  TailFrame frame() const;

  Scalar entry(std::size_t i, std::size_t j) const;
  /// Nonzero entries of row i in increasing column order.
  std::vector<std::pair<std::size_t, Scalar>> row(std::size_t i) const;
  /// Rows 1..R and one period of tail rows; every other row repeats one of them.
  std::size_t representative_rows_end() const { return rows_ + tail_.period(); }

  /// Same matrix described on the larger window; the frame must come from
  /// common_frame so the tail stays aligned.
  LMatrix reframed(const CommonFrame& f) const;

  std::string str() const;
  static LMatrix parse(std::string_view text);

  LMatrix operator-() const;
  friend LMatrix operator+(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator-(const LMatrix& a, const LMatrix& b) { return a + (-b); }
  friend LMatrix operator*(const Scalar& c, const LMatrix& a);

  /// Equality of the represented matrices, independent of window choice.
  friend bool operator==(const LMatrix& a, const LMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Cell, Scalar> entries_;
  BlockTail tail_;
};

/// Ã x for x in c₀₀.
KVector lmat_apply(const LMatrix& a, const KVector& x);
/// Â x = f⁻¹(Ã f(x)).
EcSeq lmat_apply(const LMatrix& a, const EcSeq& x);

struct PositivityResult {
  enum class Condition { alpha, beta };
  struct Violation {
    Condition condition = Condition::alpha;
    std::size_t row = 0;
    std::size_t col = 0;  ///< alpha only
    Scalar lhs;           ///< alpha: a₀ⱼ + aᵢⱼ; beta: a₀₀ + aᵢ₀
    Scalar rhs;           ///< alpha: 0; beta: Σⱼ (a₀ⱼ + aᵢⱼ)
  };
  bool positive = true;
  std::optional<Violation> violation;
};

struct RegularityResult {
  bool regular = true;
  Scalar sup;  ///< supremum of the absolute row sums over i ≥ 0
  std::size_t attained_at = 0;
};

struct ContinuityResult {
  bool order_continuous = true;
  std::optional<std::size_t> row;  ///< first row i ≥ 1 violating the balance
  Scalar residual;                 ///< (a₀₀ + aᵢ₀) − Σⱼ (aᵢⱼ + a₀ⱼ) at that row
};

/// (α) a₀ⱼ + aᵢⱼ ≥ 0 for i, j ≥ 1 and (β) a₀₀ + aᵢ₀ ≥ Σⱼ (a₀ⱼ + aᵢⱼ).
PositivityResult lmat_is_positive(const LMatrix& a);
RegularityResult lmat_is_regular(const LMatrix& a);
/// Σ_{j≥1} (aᵢⱼ + a₀ⱼ) = a₀₀ + aᵢ₀ for every i ≥ 1.
ContinuityResult lmat_is_order_continuous(const LMatrix& a);

/// Σ_{j≥1} (a₀ⱼ + aᵢⱼ); row 0 has finite support so the sum is finite.
Scalar balance_sum(const LMatrix& a, std::size_t i);

}  // namespace preriesz
