#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preriesz/detail/lines.hpp"
#include "preriesz/scalar.hpp"

namespace preriesz {

/// Periodic block-diagonal pattern filling the region to the lower right of a
/// matrix window. Relative to the tail origin, block b covers rows and columns
/// [b·p, (b+1)·p) and every block equals the same p×p array. The stored period
/// is always minimal.
class BlockTail {
 public:
  BlockTail();  ///< zero pattern, period 1
  BlockTail(std::size_t period, std::vector<Scalar> row_major);

  static BlockTail zero() { return {}; }
  static BlockTail identity() { return BlockTail(1, {Scalar(1)}); }

  std::size_t period() const noexcept { return period_; }
  const Scalar& cell(std::size_t r, std::size_t c) const { return block_[r * period_ + c]; }
  const std::vector<Scalar>& cells() const noexcept { return block_; }
  /// Entry at (row, col) measured from the tail origin.
  Scalar entry(std::size_t rel_row, std::size_t rel_col) const;

  bool is_zero() const;
  bool is_identity() const { return period_ == 1 && block_[0] == 1; }
  bool is_diagonal() const;

  Scalar row_sum(std::size_t r) const;
  Scalar abs_row_sum(std::size_t r) const;
  /// Nonzero entries of block row r as (column within block, value).
  std::vector<std::pair<std::size_t, Scalar>> row_entries(std::size_t r) const;

  /// Whether a q×q block tiling reproduces the pattern (q divides period).
  bool tiles_with(std::size_t q) const;
  /// The same pattern described with block size `period`, a multiple of the
  /// minimal one; the result is not reduced.
  std::vector<Scalar> cells_at_period(std::size_t period) const;
  /// Pattern seen from an origin moved `shift` steps down the diagonal,
  /// described with block size `period`. Needs shift to be a multiple of the
  /// period unless the pattern is diagonal.
  std::vector<Scalar> cells_shifted(std::size_t shift, std::size_t period) const;

  BlockTail abs() const;

  friend bool operator==(const BlockTail&, const BlockTail&) = default;

 private:
  std::size_t period_ = 1;
  std::vector<Scalar> block_;
};

/// Builds a reduced tail from cells at an arbitrary (possibly non-minimal) period.
BlockTail make_tail(std::size_t period, std::vector<Scalar> cells);

/// How far a tail can be re-anchored when a window grows.
enum class TailMobility {
  free,      ///< zero block: rows and columns move independently
  diagonal,  ///< diagonal block: any shift along the diagonal
  rigid,     ///< general block: shifts along the diagonal by whole periods
};

TailMobility mobility_of(const BlockTail& t);

/// Window corner (last explicit row R, last explicit column C) plus tail data.
struct TailFrame {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t period = 1;
  TailMobility mobility = TailMobility::free;
};

struct CommonFrame {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t period = 1;
};

/// Smallest joint window both matrices can be re-anchored to, or nothing when
/// their tails sit on different diagonals or incompatible block alignments.
std::optional<CommonFrame> common_frame(const TailFrame& a, const TailFrame& b);

std::size_t lcm_size(std::size_t a, std::size_t b);

namespace detail {

/// `tail zero`, `tail identity`, or `tail block p` followed by p lines of p scalars.
BlockTail parse_tail(const Line& head, LineSource& src);
/// Inverse of parse_tail; every line ends in a newline.
std::string tail_str(const BlockTail& t);

}  // namespace detail

}  // namespace preriesz
