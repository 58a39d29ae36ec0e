#include "preriesz/lmatrix.hpp"

#include <algorithm>
#include <set>

#include "preriesz/detail/cursor.hpp"
#include "preriesz/detail/lines.hpp"
#include "preriesz/error.hpp"

namespace preriesz {

Scalar KVector::at(std::size_t i) const {
  const auto it = coords.find(i);
  return it == coords.end() ? Scalar{} : it->second;
}

KVector KVector::from_ec(const EcSeq& x) {
  const BasisCoords b = ec_to_basis(x);
  KVector v;
  if (!b.lambda0.is_zero()) v.coords[0] = b.lambda0;
  for (const auto& [i, c] : b.lambdas) v.coords[i] = c;
  return v;
}

EcSeq KVector::to_ec() const {
  BasisCoords b;
  for (const auto& [i, c] : coords) {
    if (i == 0) {
      b.lambda0 = c;
    } else {
      b.lambdas[i] = c;
    }
  }
  return basis_to_ec(b);
}

bool k_member(const KVector& x) {
  const Scalar x0 = x.at(0);
  if (x0.sign() < 0) return false;
  for (const auto& [i, v] : x.coords) {
    if (i != 0 && (x0 + v).sign() < 0) return false;
  }
  return true;
}

LMatrix::LMatrix(std::size_t rows, std::size_t cols, std::map<Cell, Scalar> entries, BlockTail tail)
    : rows_(rows), cols_(cols), tail_(std::move(tail)) {
  for (auto& [cell, v] : entries) {
    if (cell.first > rows_ || cell.second > cols_) {
      throw InvariantError("explicit entry (" + std::to_string(cell.first) + ", " + std::to_string(cell.second) +
                           ") lies outside the window");
    }
    if (!v.is_zero()) entries_.emplace(cell, std::move(v));
  }
}

LMatrix LMatrix::identity() { return LMatrix(0, 0, {{{0, 0}, Scalar(1)}}, BlockTail::identity()); }

LMatrix LMatrix::limit_functional(Scalar c) { return LMatrix(0, 0, {{{0, 0}, std::move(c)}}); }

TailFrame LMatrix::frame() const { return {rows_, cols_, tail_.period(), mobility_of(tail_)}; }

Scalar LMatrix::entry(std::size_t i, std::size_t j) const {
  if (i <= rows_ && j <= cols_) {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? Scalar{} : it->second;
  }
  if (i > rows_ && j > cols_) return tail_.entry(i - rows_ - 1, j - cols_ - 1);
  return {};
}

std::vector<std::pair<std::size_t, Scalar>> LMatrix::row(std::size_t i) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  if (i <= rows_) {
    for (auto it = entries_.lower_bound({i, 0}); it != entries_.end() && it->first.first == i; ++it) {
      out.emplace_back(it->first.second, it->second);
    }
    return out;
  }
  const std::size_t p = tail_.period();
  const std::size_t rel = i - rows_ - 1;
  const std::size_t base = cols_ + 1 + (rel / p) * p;
  for (const auto& [c, v] : tail_.row_entries(rel % p)) out.emplace_back(base + c, v);
  return out;
}

LMatrix LMatrix::reframed(const CommonFrame& f) const {
  if (f.rows < rows_ || f.cols < cols_) throw InvariantError("a frame can only enlarge the window");
  std::map<Cell, Scalar> entries = entries_;
  for (std::size_t i = rows_ + 1; i <= f.rows; ++i) {
    for (auto& [j, v] : row(i)) {
      if (j <= f.cols) entries.emplace(Cell{i, j}, std::move(v));
    }
  }
  std::vector<Scalar> cells;
  if (tail_.is_zero()) {
    cells.assign(f.period * f.period, Scalar{});
  } else {
    if (f.cols - cols_ != f.rows - rows_) throw InvariantError("frame leaves the tail diagonal");
    cells = tail_.cells_shifted(f.rows - rows_, f.period);
  }
  return LMatrix(f.rows, f.cols, std::move(entries), make_tail(f.period, std::move(cells)));
}

std::string LMatrix::str() const {
  std::string out = "lmatrix window " + std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (const auto& [cell, v] : entries_) {
    out += std::to_string(cell.first) + " " + std::to_string(cell.second) + " " + v.str() + "\n";
  }
  return out + detail::tail_str(tail_);
}

LMatrix LMatrix::parse(std::string_view text) {
  detail::LineSource src(text);
  const detail::Line head = src.require("'lmatrix window R C'");
  std::size_t rows = 0;
  std::size_t cols = 0;
  detail::at_line(head, [&] {
    detail::Cursor cur(head.text);
    cur.expect_word("lmatrix");
    cur.expect_word("window");
    rows = cur.natural();
    cols = cur.natural();
    if (!cur.at_end()) cur.fail("trailing characters");
  });
  std::map<Cell, Scalar> entries;
  std::optional<BlockTail> tail;
  while (auto line = src.next()) {
    if (tail) throw FormatError(line->number, "content after the tail descriptor");
    if (line->text.rfind("tail", 0) == 0) {
      tail = detail::parse_tail(*line, src);
      continue;
    }
    detail::at_line(*line, [&] {
      detail::Cursor cur(line->text);
      const std::size_t i = cur.natural();
      const std::size_t j = cur.natural();
      Scalar v = cur.scalar();
      if (!cur.at_end()) cur.fail("trailing characters");
      if (i > rows || j > cols) cur.fail("entry lies outside the declared window");
      if (!entries.emplace(Cell{i, j}, std::move(v)).second) cur.fail("duplicate entry");
    });
  }
  if (!tail) throw FormatError(src.last_line() == 0 ? 1 : src.last_line(), "missing tail descriptor");
  return LMatrix(rows, cols, std::move(entries), std::move(*tail));
}

LMatrix LMatrix::operator-() const { return Scalar(-1) * *this; }

LMatrix operator+(const LMatrix& a, const LMatrix& b) {
  const auto f = common_frame(a.frame(), b.frame());
  if (!f) throw RepresentationError("tails of the summands are not aligned on a common diagonal");
  const LMatrix ra = a.reframed(*f);
  const LMatrix rb = b.reframed(*f);
  std::map<Cell, Scalar> entries = ra.entries_;
  for (const auto& [cell, v] : rb.entries_) entries[cell] += v;
  std::vector<Scalar> cells = ra.tail_.cells_at_period(f->period);
  const std::vector<Scalar> other = rb.tail_.cells_at_period(f->period);
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += other[k];
  return LMatrix(f->rows, f->cols, std::move(entries), make_tail(f->period, std::move(cells)));
}

LMatrix operator*(const Scalar& c, const LMatrix& a) {
  std::map<Cell, Scalar> entries;
  for (const auto& [cell, v] : a.entries_) entries.emplace(cell, c * v);
  std::vector<Scalar> cells = a.tail_.cells();
  for (auto& v : cells) v *= c;
  return LMatrix(a.rows_, a.cols_, std::move(entries), make_tail(a.tail_.period(), std::move(cells)));
}

bool operator==(const LMatrix& a, const LMatrix& b) {
  // Beyond both windows each matrix is invariant under diagonal shifts by the
  // common period, and tail rows are supported within a band around the
  // diagonal, so this square decides equality.
  const std::size_t period = lcm_size(a.tail_.period(), b.tail_.period());
  const std::size_t bound = std::max(a.rows_, b.rows_) + std::max(a.cols_, b.cols_) + 2 * period + 2;
  for (std::size_t i = 0; i <= bound; ++i) {
    const auto ra = a.row(i);
    const auto rb = b.row(i);
    if (ra != rb) return false;
  }
  return true;
}

KVector lmat_apply(const LMatrix& a, const KVector& x) {
  std::map<std::size_t, Scalar> acc;
  const std::size_t p = a.tail().period();
  for (const auto& [j, xj] : x.coords) {
    if (j <= a.cols()) {
      for (const auto& [cell, v] : a.explicit_entries()) {
        if (cell.second == j) acc[cell.first] += v * xj;
      }
      continue;
    }
    const std::size_t rel = j - a.cols() - 1;
    const std::size_t base = a.rows() + 1 + (rel / p) * p;
    for (std::size_t r = 0; r < p; ++r) {
      const Scalar& v = a.tail().cell(r, rel % p);
      if (!v.is_zero()) acc[base + r] += v * xj;
    }
  }
  KVector out;
  for (auto& [i, v] : acc) {
    if (!v.is_zero()) out.coords.emplace(i, std::move(v));
  }
  return out;
}

EcSeq lmat_apply(const LMatrix& a, const EcSeq& x) { return lmat_apply(a, KVector::from_ec(x)).to_ec(); }

Scalar balance_sum(const LMatrix& a, std::size_t i) {
  Scalar s;
  for (const auto& [j, v] : a.row(0)) {
    if (j != 0) s += v;
  }
  for (const auto& [j, v] : a.row(i)) {
    if (j != 0) s += v;
  }
  return s;
}

PositivityResult lmat_is_positive(const LMatrix& a) {
  using Condition = PositivityResult::Condition;
  const Scalar a00 = a.entry(0, 0);
  for (std::size_t i = 1; i <= a.representative_rows_end(); ++i) {
    std::set<std::size_t> cols;
    for (const auto& [j, v] : a.row(0)) {
      if (j != 0) cols.insert(j);
    }
    for (const auto& [j, v] : a.row(i)) {
      if (j != 0) cols.insert(j);
    }
    for (const std::size_t j : cols) {
      const Scalar s = a.entry(0, j) + a.entry(i, j);
      if (s.sign() < 0) return {false, PositivityResult::Violation{Condition::alpha, i, j, s, Scalar{}}};
    }
    const Scalar lhs = a00 + a.entry(i, 0);
    const Scalar rhs = balance_sum(a, i);
    if (lhs < rhs) return {false, PositivityResult::Violation{Condition::beta, i, 0, lhs, rhs}};
  }
  return {};
}

RegularityResult lmat_is_regular(const LMatrix& a) {
  RegularityResult out;
  for (std::size_t i = 0; i <= a.representative_rows_end(); ++i) {
    Scalar s;
    for (const auto& [j, v] : a.row(i)) s += v.abs();
    if (s > out.sup) {
      out.sup = s;
      out.attained_at = i;
    }
  }
  return out;
}

ContinuityResult lmat_is_order_continuous(const LMatrix& a) {
  const Scalar a00 = a.entry(0, 0);
  for (std::size_t i = 1; i <= a.representative_rows_end(); ++i) {
    Scalar residual = a00 + a.entry(i, 0) - balance_sum(a, i);
    if (!residual.is_zero()) return {false, i, std::move(residual)};
  }
  return {};
}

}  // namespace preriesz
