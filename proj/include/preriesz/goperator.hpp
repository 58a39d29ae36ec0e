#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "preriesz/block_tail.hpp"
#include "preriesz/ecseq.hpp"
#include "preriesz/lmatrix.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// t_k = k(k+1)/2. Block k of the triangular partition of ℕ is (t_{k-1}, t_k].
std::size_t triangular(std::size_t k);
/// Block containing position p ≥ 1.
std::size_t tri_block(std::size_t p);
/// Slot of p inside its block, 1-based.
std::size_t tri_slot(std::size_t p);

/// prefix, then `cycle` repeated forever; positions start at 1.
struct EventuallyPeriodic {
  std::vector<Scalar> prefix;
  std::vector<Scalar> cycle;  ///< nonempty

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

/// Indicator of { t_{k-1} + i : k ≥ i }: slot i of every block long enough to have one.
struct TriSlot {
  std::size_t index = 1;

  friend bool operator==(const TriSlot&, const TriSlot&) = default;
};

using BoundedSeq = std::variant<EcSeq, EventuallyPeriodic, TriSlot>;

Scalar seq_at(const BoundedSeq& s, std::size_t p);
Scalar seq_limsup(const BoundedSeq& s);
Scalar seq_liminf(const BoundedSeq& s);
Scalar seq_sup_abs(const BoundedSeq& s);
/// `ec: ...`, `periodic: [prefix] period [cycle]` or `trislot i`.
std::string seq_str(const BoundedSeq& s);
BoundedSeq parse_bounded_seq(std::string_view text);

/// T(e_i) = TriSlot(i) for every i ≥ start.
struct TriSlotRule {
  std::size_t start = 1;

  friend bool operator==(const TriSlotRule&, const TriSlotRule&) = default;
};

/// T(e_i)(p) = tail entry at (p − row_origin, i − col_origin) for i ≥ col_origin:
/// the columns of an LMatrix tail.
struct BlockColumnRule {
  std::size_t row_origin = 1;
  std::size_t col_origin = 1;
  BlockTail tail;

  friend bool operator==(const BlockColumnRule&, const BlockColumnRule&) = default;
};

using ColumnRule = std::variant<TriSlotRule, BlockColumnRule>;

/// Linear operator ℓ₀^∞ → ℓ^∞ given on the basis {𝟙, e_1, e_2, ...}: T(𝟙),
/// finitely many explicit T(e_i), and an optional rule for the remaining i.
/// Columns neither explicit nor ruled are zero.
class GOperator {
 public:
  GOperator() : one_(EcSeq{}) {}
  GOperator(BoundedSeq one, std::map<std::size_t, BoundedSeq> columns, std::optional<ColumnRule> rule);

  const BoundedSeq& img_one() const noexcept { return one_; }
  const std::map<std::size_t, BoundedSeq>& columns() const noexcept { return columns_; }
  const std::optional<ColumnRule>& rule() const noexcept { return rule_; }
  /// First column index governed by the rule (one past the explicit columns otherwise).
  std::size_t rule_start() const;

  Scalar one_at(std::size_t p) const { return seq_at(one_, p); }
  Scalar e_at(std::size_t i, std::size_t p) const;
  Scalar e_limsup(std::size_t i) const;
  /// Nonzero T(e_i)(p) over all i, in increasing i.
  std::vector<std::pair<std::size_t, Scalar>> row(std::size_t p) const;
  bool uses_trislot() const;

  std::string str() const;
  static GOperator parse(std::string_view text);

  friend bool operator==(const GOperator&, const GOperator&) = default;

 private:
  BoundedSeq one_;
  std::map<std::size_t, BoundedSeq> columns_;
  std::optional<ColumnRule> rule_;
};

/// 𝟙 ↦ 𝟙 and e_i ↦ TriSlot(i).
GOperator build_T_example21();
/// The operator Â as a map into ℓ^∞; its columns are f⁻¹ of the matrix columns.
GOperator induced_operator(const LMatrix& a);

enum class RowwiseMode { positive, order_continuous };
enum class Decision { holds, fails, undecidable };

struct RowwiseResult {
  Decision decision = Decision::holds;
  std::size_t positions_checked = 0;
  struct Witness {
    std::size_t position = 0;
    std::optional<std::size_t> column;  ///< set when some T(e_i)(p) < 0
    Scalar row_sum;                     ///< Σ_i T(e_i)(p)
    Scalar one_value;                   ///< T(𝟙)(p)
  };
  std::optional<Witness> witness;
  std::string note;
};

/// Positive mode: T(e_i)(p) ≥ 0 and Σ_i T(e_i)(p) ≤ T(𝟙)(p) at every p.
/// Order-continuous mode: Σ_i T(e_i)(p) = T(𝟙)(p) at every p. Positions are
/// enumerated up to a bound after which every row repeats an earlier row
/// class; if that bound exceeds `budget` the result is undecidable.
RowwiseResult gop_rowwise_check(const GOperator& t, RowwiseMode mode, std::size_t budget = 2'000'000);

/// Last position the rowwise check has to inspect.
std::size_t rowwise_horizon(const GOperator& t);

}  // namespace preriesz
