#include "preriesz/block_tail.hpp"

#include <numeric>

#include "preriesz/detail/cursor.hpp"

#include "preriesz/error.hpp"

namespace preriesz {

namespace {

std::size_t reduce_period(std::size_t period, const std::vector<Scalar>& cells) {
  for (std::size_t q = 1; q < period; ++q) {
    if (period % q != 0) continue;
    bool ok = true;
    for (std::size_t r = 0; r < period && ok; ++r) {
      for (std::size_t c = 0; c < period && ok; ++c) {
        const Scalar& v = cells[r * period + c];
        const Scalar expected = (r / q == c / q) ? cells[(r % q) * period + (c % q)] : Scalar{};
        if (v != expected) ok = false;
      }
    }
    if (ok) return q;
  }
  return period;
}

}  // namespace

BlockTail::BlockTail() : block_{Scalar{}} {}

BlockTail::BlockTail(std::size_t period, std::vector<Scalar> row_major) : period_(period), block_(std::move(row_major)) {
  if (period_ == 0) throw InvariantError("block period must be positive");
  if (block_.size() != period_ * period_) throw InvariantError("block must hold period² cells");
  const std::size_t q = reduce_period(period_, block_);
  if (q != period_) {
    std::vector<Scalar> small(q * q);
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) small[r * q + c] = block_[r * period_ + c];
    }
    block_ = std::move(small);
    period_ = q;
  }
}

BlockTail make_tail(std::size_t period, std::vector<Scalar> cells) { return BlockTail(period, std::move(cells)); }

Scalar BlockTail::entry(std::size_t rel_row, std::size_t rel_col) const {
  if (rel_row / period_ != rel_col / period_) return {};
  return cell(rel_row % period_, rel_col % period_);
}

bool BlockTail::is_zero() const {
  for (const auto& v : block_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool BlockTail::is_diagonal() const {
  for (std::size_t r = 0; r < period_; ++r) {
    for (std::size_t c = 0; c < period_; ++c) {
      if (r != c && !cell(r, c).is_zero()) return false;
    }
  }
  return true;
}

Scalar BlockTail::row_sum(std::size_t r) const {
  Scalar s;
  for (std::size_t c = 0; c < period_; ++c) s += cell(r, c);
  return s;
}

Scalar BlockTail::abs_row_sum(std::size_t r) const {
  Scalar s;
  for (std::size_t c = 0; c < period_; ++c) s += cell(r, c).abs();
  return s;
}

std::vector<std::pair<std::size_t, Scalar>> BlockTail::row_entries(std::size_t r) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t c = 0; c < period_; ++c) {
    if (!cell(r, c).is_zero()) out.emplace_back(c, cell(r, c));
  }
  return out;
}

bool BlockTail::tiles_with(std::size_t q) const { return q % period_ == 0; }

std::vector<Scalar> BlockTail::cells_at_period(std::size_t period) const {
  if (period % period_ != 0) throw InvariantError("period must be a multiple of the block size");
  std::vector<Scalar> out(period * period);
  for (std::size_t r = 0; r < period; ++r) {
    for (std::size_t c = 0; c < period; ++c) out[r * period + c] = entry(r, c);
  }
  return out;
}

std::vector<Scalar> BlockTail::cells_shifted(std::size_t shift, std::size_t period) const {
  if (period % period_ != 0) throw InvariantError("period must be a multiple of the block size");
  if (!is_diagonal() && shift % period_ != 0) {
    throw RepresentationError("block tail cannot be re-anchored off its block boundaries");
  }
  std::vector<Scalar> out(period * period);
  for (std::size_t r = 0; r < period; ++r) {
    for (std::size_t c = 0; c < period; ++c) out[r * period + c] = entry(r + shift, c + shift);
  }
  return out;
}

BlockTail BlockTail::abs() const {
  std::vector<Scalar> cells;
  cells.reserve(block_.size());
  for (const auto& v : block_) cells.push_back(v.abs());
  return BlockTail(period_, std::move(cells));
}

TailMobility mobility_of(const BlockTail& t) {
  if (t.is_zero()) return TailMobility::free;
  if (t.is_diagonal()) return TailMobility::diagonal;
  return TailMobility::rigid;
}

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

std::optional<CommonFrame> common_frame(const TailFrame& a, const TailFrame& b) {
  using I = long long;
  const auto offset = [](const TailFrame& f) { return static_cast<I>(f.cols) - static_cast<I>(f.rows); };
  std::optional<I> diag;
  if (a.mobility != TailMobility::free) diag = offset(a);
  if (b.mobility != TailMobility::free) {
    if (diag && *diag != offset(b)) return std::nullopt;
    diag = offset(b);
  }
  const std::size_t period = lcm_size(a.period, b.period);
  const std::size_t row_floor = std::max(a.rows, b.rows);
  const std::size_t col_floor = std::max(a.cols, b.cols);
  const std::size_t limit = row_floor + col_floor + a.period * b.period + 2;
  for (std::size_t r = row_floor; r <= limit; ++r) {
    if (a.mobility == TailMobility::rigid && (r - a.rows) % a.period != 0) continue;
    if (b.mobility == TailMobility::rigid && (r - b.rows) % b.period != 0) continue;
    if (!diag) return CommonFrame{r, col_floor, period};
    const I c = static_cast<I>(r) + *diag;
    if (c < static_cast<I>(col_floor)) continue;
    return CommonFrame{r, static_cast<std::size_t>(c), period};
  }
  return std::nullopt;
}

namespace detail {

BlockTail parse_tail(const Line& head, LineSource& src) {
  enum class Kind { zero, identity, block };
  std::size_t p = 0;
  const Kind kind = at_line(head, [&] {
    Cursor cur(head.text);
    cur.expect_word("tail");
    Kind k = Kind::zero;
    if (cur.consume_word("zero")) {
      k = Kind::zero;
    } else if (cur.consume_word("identity")) {
      k = Kind::identity;
    } else if (cur.consume_word("block")) {
      k = Kind::block;
      p = cur.natural();
      if (p == 0) cur.fail("block size must be positive");
    } else {
      cur.fail("expected 'zero', 'identity' or 'block'");
    }
    if (!cur.at_end()) cur.fail("trailing characters");
    return k;
  });
  if (kind == Kind::zero) return BlockTail::zero();
  if (kind == Kind::identity) return BlockTail::identity();
  std::vector<Scalar> cells;
  cells.reserve(p * p);
  for (std::size_t r = 0; r < p; ++r) {
    const Line row = src.require("a block row");
    at_line(row, [&] {
      Cursor cur(row.text);
      for (std::size_t c = 0; c < p; ++c) cells.push_back(cur.scalar());
      if (!cur.at_end()) cur.fail("block row has more than " + std::to_string(p) + " entries");
    });
  }
  return BlockTail(p, std::move(cells));
}

std::string tail_str(const BlockTail& t) {
  if (t.is_zero()) return "tail zero\n";
  if (t.is_identity()) return "tail identity\n";
  std::string out = "tail block " + std::to_string(t.period()) + "\n";
  for (std::size_t r = 0; r < t.period(); ++r) {
    for (std::size_t c = 0; c < t.period(); ++c) {
      if (c != 0) out += ' ';
      out += t.cell(r, c).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

}  // namespace preriesz
