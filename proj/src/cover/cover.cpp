#include "preriesz/cover.hpp"

#include <algorithm>

#include "preriesz/detail/cursor.hpp"
#include "preriesz/detail/lines.hpp"
#include "preriesz/error.hpp"

namespace preriesz {

namespace {

std::vector<Scalar> minimal_cycle(std::vector<Scalar> v) {
  if (v.empty()) return {Scalar{}};
  for (std::size_t q = 1; q < v.size(); ++q) {
    if (v.size() % q != 0) continue;
    bool ok = true;
    for (std::size_t k = q; k < v.size() && ok; ++k) ok = v[k] == v[k % q];
    if (ok) {
      v.resize(q);
      break;
    }
  }
  return v;
}

std::vector<Scalar> cycle_at(const std::vector<Scalar>& cycle, std::size_t shift, std::size_t length) {
  std::vector<Scalar> out;
  out.reserve(length);
  for (std::size_t r = 0; r < length; ++r) out.push_back(cycle[(shift + r) % cycle.size()]);
  return out;
}

Scalar sum_of(const std::map<std::size_t, Scalar>& m) {
  Scalar s;
  for (const auto& [j, v] : m) s += v;
  return s;
}

}  // namespace

CoverMatrix::CoverMatrix(std::size_t rows, std::size_t cols, std::map<Cell, Scalar> entries,
                         std::map<std::size_t, Scalar> limits, BlockTail tail, std::vector<Scalar> tail_col0)
    : rows_(rows), cols_(cols), tail_(std::move(tail)), col0_(minimal_cycle(std::move(tail_col0))) {
  for (auto& [cell, v] : entries) {
    if (cell.first == 0 || cell.first > rows_ || cell.second > cols_) {
      throw InvariantError("explicit entry (" + std::to_string(cell.first) + ", " + std::to_string(cell.second) +
                           ") lies outside the window");
    }
    if (!v.is_zero()) entries_.emplace(cell, std::move(v));
  }
  for (auto& [j, v] : limits) {
    if (j == 0 || j > cols_) throw InvariantError("column limit " + std::to_string(j) + " lies outside the window");
    if (!v.is_zero()) limits_.emplace(j, std::move(v));
  }
}

Scalar CoverMatrix::limit(std::size_t j) const {
  const auto it = limits_.find(j);
  return it == limits_.end() ? Scalar{} : it->second;
}

Scalar CoverMatrix::entry(std::size_t i, std::size_t j) const {
  if (i == 0) throw InvariantError("cover rows start at 1");
  if (i <= rows_) {
    if (j > cols_) return {};
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? Scalar{} : it->second;
  }
  const std::size_t rel = i - rows_ - 1;
  if (j == 0) return col0_[rel % col0_.size()];
  if (j <= cols_) return limit(j);
  return tail_.entry(rel, j - cols_ - 1);
}

std::vector<std::pair<std::size_t, Scalar>> CoverMatrix::row(std::size_t i) const {
  if (i == 0) throw InvariantError("cover rows start at 1");
  std::vector<std::pair<std::size_t, Scalar>> out;
  if (i <= rows_) {
    for (auto it = entries_.lower_bound({i, 0}); it != entries_.end() && it->first.first == i; ++it) {
      out.emplace_back(it->first.second, it->second);
    }
    return out;
  }
  const std::size_t rel = i - rows_ - 1;
  if (const Scalar& c = col0_[rel % col0_.size()]; !c.is_zero()) out.emplace_back(0, c);
  for (const auto& [j, v] : limits_) out.emplace_back(j, v);
  const std::size_t p = tail_.period();
  const std::size_t base = cols_ + 1 + (rel / p) * p;
  for (auto& [c, v] : tail_.row_entries(rel % p)) out.emplace_back(base + c, std::move(v));
  return out;
}

Scalar CoverMatrix::row_sum_from_one(std::size_t i) const {
  Scalar s;
  for (const auto& [j, v] : row(i)) {
    if (j != 0) s += v;
  }
  return s;
}

std::size_t CoverMatrix::row_period() const { return lcm_size(tail_.period(), col0_.size()); }

CoverMatrix CoverMatrix::reframed(std::size_t rows, std::size_t cols, std::size_t period) const {
  if (rows < rows_ || cols < cols_) throw InvariantError("a frame can only enlarge the window");
  std::map<Cell, Scalar> entries = entries_;
  for (std::size_t i = rows_ + 1; i <= rows; ++i) {
    for (auto& [j, v] : row(i)) {
      if (j <= cols) entries.emplace(Cell{i, j}, std::move(v));
    }
  }
  std::vector<Scalar> cells;
  if (tail_.is_zero()) {
    cells.assign(period * period, Scalar{});
  } else {
    if (cols - cols_ != rows - rows_) throw InvariantError("frame leaves the tail diagonal");
    cells = tail_.cells_shifted(rows - rows_, period);
  }
  return CoverMatrix(rows, cols, std::move(entries), limits_, make_tail(period, std::move(cells)),
                     cycle_at(col0_, rows - rows_, period));
}

template <class Op>
CoverMatrix combine(const CoverMatrix& a, const CoverMatrix& b, Op op) {
  const auto frame_of = [](const CoverMatrix& m) {
    return TailFrame{m.rows_, m.cols_, m.tail_.period(), mobility_of(m.tail_)};
  };
  const auto f = common_frame(frame_of(a), frame_of(b));
  if (!f) throw RepresentationError("tails of the operands are not aligned on a common diagonal");
  const std::size_t period = lcm_size(f->period, lcm_size(a.col0_.size(), b.col0_.size()));
  const CoverMatrix ra = a.reframed(f->rows, f->cols, period);
  const CoverMatrix rb = b.reframed(f->rows, f->cols, period);
  std::map<Cell, Scalar> entries;
  for (const auto& [cell, v] : ra.entries_) entries.emplace(cell, op(v, rb.entry(cell.first, cell.second)));
  for (const auto& [cell, v] : rb.entries_) {
    if (!ra.entries_.contains(cell)) entries.emplace(cell, op(Scalar{}, v));
  }
  std::map<std::size_t, Scalar> limits;
  for (std::size_t j = 1; j <= f->cols; ++j) limits.emplace(j, op(ra.limit(j), rb.limit(j)));
  std::vector<Scalar> cells = ra.tail_.cells_at_period(period);
  const std::vector<Scalar> other = rb.tail_.cells_at_period(period);
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] = op(cells[k], other[k]);
  const std::vector<Scalar> ca = cycle_at(ra.col0_, 0, period);
  const std::vector<Scalar> cb = cycle_at(rb.col0_, 0, period);
  std::vector<Scalar> col0;
  for (std::size_t r = 0; r < period; ++r) col0.push_back(op(ca[r], cb[r]));
  return CoverMatrix(f->rows, f->cols, std::move(entries), std::move(limits), make_tail(period, std::move(cells)),
                     std::move(col0));
}

CoverMatrix operator+(const CoverMatrix& a, const CoverMatrix& b) {
  return combine(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

CoverMatrix operator*(const Scalar& c, const CoverMatrix& a) {
  std::map<Cell, Scalar> entries;
  for (const auto& [cell, v] : a.entries_) entries.emplace(cell, c * v);
  std::map<std::size_t, Scalar> limits;
  for (const auto& [j, v] : a.limits_) limits.emplace(j, c * v);
  std::vector<Scalar> cells = a.tail_.cells();
  for (auto& v : cells) v *= c;
  std::vector<Scalar> col0 = a.col0_;
  for (auto& v : col0) v *= c;
  return CoverMatrix(a.rows_, a.cols_, std::move(entries), std::move(limits),
                     make_tail(a.tail_.period(), std::move(cells)), std::move(col0));
}

CoverMatrix CoverMatrix::operator-() const { return Scalar(-1) * *this; }

bool operator==(const CoverMatrix& a, const CoverMatrix& b) {
  // Same completeness argument as for LMatrix: past both windows every row
  // repeats under a shift by the common period.
  const std::size_t period = lcm_size(a.row_period(), b.row_period());
  const std::size_t bound = std::max(a.rows_, b.rows_) + std::max(a.cols_, b.cols_) + 2 * period + 2;
  for (std::size_t i = 1; i <= bound; ++i) {
    if (a.row(i) != b.row(i)) return false;
  }
  return true;
}

CoverMatrix cover_lattice(const CoverMatrix& a, const CoverMatrix& b, LatticeOp which) {
  if (which == LatticeOp::meet) return combine(a, b, [](const Scalar& x, const Scalar& y) { return min(x, y); });
  return combine(a, b, [](const Scalar& x, const Scalar& y) { return max(x, y); });
}

CoverMatrix abs(const CoverMatrix& b) {
  std::map<Cell, Scalar> entries;
  for (const auto& [cell, v] : b.entries_) entries.emplace(cell, v.abs());
  std::map<std::size_t, Scalar> limits;
  for (const auto& [j, v] : b.limits_) limits.emplace(j, v.abs());
  std::vector<Scalar> col0;
  for (const auto& v : b.col0_) col0.push_back(v.abs());
  return CoverMatrix(b.rows_, b.cols_, std::move(entries), std::move(limits), b.tail_.abs(), std::move(col0));
}

bool cover_leq(const CoverMatrix& a, const CoverMatrix& b) { return cover_lattice(a, b, LatticeOp::meet) == a; }

CoverConditions cover_conditions(const CoverMatrix& b) {
  // (a)-(c) hold by construction: columns j ≥ 1 settle at β_j past the window,
  // β has finite support, and column 0 takes finitely many values. The
  // quantities are still computed exactly for the report.
  CoverConditions out;
  for (const auto& [j, v] : b.limits()) out.limits_abs_sum += v.abs();
  for (std::size_t i = 1; i <= b.representative_rows_end(); ++i) {
    Scalar s;
    for (const auto& [j, v] : b.row(i)) {
      if (j == 0) {
        out.column0_sup = max(out.column0_sup, v.abs());
      } else {
        s += v.abs();
      }
    }
    out.row_abs_sup = max(out.row_abs_sup, s);
  }
  return out;
}

std::string CoverMatrix::str() const {
  std::string out = "covermatrix window " + std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (const auto& [cell, v] : entries_) {
    out += std::to_string(cell.first) + " " + std::to_string(cell.second) + " " + v.str() + "\n";
  }
  for (const auto& [j, v] : limits_) out += "limits " + std::to_string(j) + " " + v.str() + "\n";
  out += detail::tail_str(tail_);
  if (col0_.size() > 1 || !col0_[0].is_zero()) {
    out += "tailcol0";
    for (const auto& v : col0_) out += " " + v.str();
    out += "\n";
  }
  return out;
}

CoverMatrix CoverMatrix::parse(std::string_view text) {
  detail::LineSource src(text);
  const detail::Line head = src.require("'covermatrix window R C'");
  std::size_t rows = 0;
  std::size_t cols = 0;
  detail::at_line(head, [&] {
    detail::Cursor cur(head.text);
    cur.expect_word("covermatrix");
    cur.expect_word("window");
    rows = cur.natural();
    cols = cur.natural();
    if (!cur.at_end()) cur.fail("trailing characters");
  });
  std::map<Cell, Scalar> entries;
  std::map<std::size_t, Scalar> limits;
  std::optional<BlockTail> tail;
  std::optional<std::vector<Scalar>> col0;
  while (auto line = src.next()) {
    if (col0) throw FormatError(line->number, "content after the tailcol0 line");
    if (line->text.rfind("tailcol0", 0) == 0) {
      if (!tail) throw FormatError(line->number, "tailcol0 must follow the tail descriptor");
      col0 = detail::at_line(*line, [&] {
        detail::Cursor cur(line->text);
        cur.expect_word("tailcol0");
        std::vector<Scalar> v;
        while (!cur.at_end()) v.push_back(cur.scalar());
        if (v.empty()) cur.fail("tailcol0 needs at least one value");
        return v;
      });
      continue;
    }
    if (tail) throw FormatError(line->number, "content after the tail descriptor");
    if (line->text.rfind("tail", 0) == 0) {
      tail = detail::parse_tail(*line, src);
      continue;
    }
    detail::at_line(*line, [&] {
      detail::Cursor cur(line->text);
      if (cur.consume_word("limits")) {
        const std::size_t j = cur.natural();
        Scalar v = cur.scalar();
        if (!cur.at_end()) cur.fail("trailing characters");
        if (j == 0 || j > cols) cur.fail("column limit outside columns 1..C");
        if (!limits.emplace(j, std::move(v)).second) cur.fail("duplicate column limit");
        return;
      }
      const std::size_t i = cur.natural();
      const std::size_t j = cur.natural();
      Scalar v = cur.scalar();
      if (!cur.at_end()) cur.fail("trailing characters");
      if (i == 0 || i > rows || j > cols) cur.fail("entry lies outside the declared window");
      if (!entries.emplace(Cell{i, j}, std::move(v)).second) cur.fail("duplicate entry");
    });
  }
  if (!tail) throw FormatError(src.last_line() == 0 ? 1 : src.last_line(), "missing tail descriptor");
  return CoverMatrix(rows, cols, std::move(entries), std::move(limits), std::move(*tail),
                     col0.value_or(std::vector<Scalar>{Scalar{}}));
}

RowSplitMatrix step_add_row0(const LMatrix& a) {
  RowSplitMatrix out;
  for (const auto& [j, v] : a.row(0)) out.row0.emplace(j, v);
  std::map<Cell, Scalar> entries;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 0; j <= a.cols(); ++j) entries.emplace(Cell{i, j}, a.entry(0, j) + a.entry(i, j));
  }
  std::map<std::size_t, Scalar> limits;
  for (std::size_t j = 1; j <= a.cols(); ++j) limits.emplace(j, a.entry(0, j));
  out.body = CoverMatrix(a.rows(), a.cols(), std::move(entries), std::move(limits), a.tail(), {a.entry(0, 0)});
  return out;
}

CoverMatrix step_drop_row0(const RowSplitMatrix& m) { return m.body; }

namespace {

/// Adds sign·Σ_{j≥1} m_ij to the 0th entry of every row.
CoverMatrix shift_col0_by_row_sums(const CoverMatrix& m, int sign) {
  std::map<Cell, Scalar> entries = m.explicit_entries();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    const Scalar s = m.row_sum_from_one(i);
    entries[Cell{i, 0}] = sign > 0 ? m.entry(i, 0) + s : m.entry(i, 0) - s;
  }
  const Scalar beta = sum_of(m.limits());
  const std::size_t period = m.row_period();
  std::vector<Scalar> col0;
  for (std::size_t r = 0; r < period; ++r) {
    const Scalar s = beta + m.tail().row_sum(r % m.tail().period());
    const Scalar& c = m.tail_col0()[r % m.tail_col0().size()];
    col0.push_back(sign > 0 ? c + s : c - s);
  }
  return CoverMatrix(m.rows(), m.cols(), std::move(entries), m.limits(), m.tail(), std::move(col0));
}

}  // namespace

CoverMatrix step_balance_col0(const CoverMatrix& m) { return shift_col0_by_row_sums(m, -1); }

CoverMatrix unstep_balance_col0(const CoverMatrix& b) { return shift_col0_by_row_sums(b, +1); }

RowSplitMatrix unstep_drop_row0(const CoverMatrix& body, std::map<std::size_t, Scalar> row0) {
  std::erase_if(row0, [](const auto& kv) { return kv.second.is_zero(); });
  return {std::move(row0), body};
}

LMatrix unstep_add_row0(const RowSplitMatrix& m) {
  const CoverMatrix& body = m.body;
  const auto top = [&](std::size_t j) {
    const auto it = m.row0.find(j);
    return it == m.row0.end() ? Scalar{} : it->second;
  };
  if (!m.row0.empty() && m.row0.rbegin()->first > body.cols()) {
    throw InvariantError("0th row reaches past the window; its columns would not be eventually zero");
  }
  for (const auto& c : body.tail_col0()) {
    if (c != top(0)) throw InvariantError("column 0 would not be eventually zero");
  }
  for (std::size_t j = 1; j <= body.cols(); ++j) {
    if (body.limit(j) != top(j)) throw InvariantError("column " + std::to_string(j) + " would not be eventually zero");
  }
  std::map<Cell, Scalar> entries;
  for (const auto& [j, v] : m.row0) entries.emplace(Cell{0, j}, v);
  for (std::size_t i = 1; i <= body.rows(); ++i) {
    for (std::size_t j = 0; j <= body.cols(); ++j) entries.emplace(Cell{i, j}, body.entry(i, j) - top(j));
  }
  return LMatrix(body.rows(), body.cols(), std::move(entries), body.tail());
}

CoverMatrix embed_F(const LMatrix& a) {
  const RegularityResult reg = lmat_is_regular(a);
  if (!reg.regular) throw RepresentationError("matrix is not regular: absolute row sums are unbounded");
  return step_balance_col0(step_drop_row0(step_add_row0(a)));
}

PreimageCertificate preimage_solve(const CoverMatrix& b) {
  PreimageCertificate out;
  out.m1 = unstep_balance_col0(b);
  const CoverMatrix& m1 = out.m1;
  const std::vector<Scalar>& c = m1.tail_col0();
  if (c.size() > 1) {
    // A non-constant periodic column has a descent inside one period.
    for (std::size_t r = 0; r < c.size(); ++r) {
      const Scalar& v = c[r];
      const Scalar& w = c[(r + 1) % c.size()];
      if (v > w) {
        const std::size_t n = m1.rows() + 1 + r;
        out.verdict = Inconsistent{0, {n, n + 1}, {v, w}, c.size()};
        return out;
      }
    }
    throw InvariantError("non-constant periodic column without a descent");
  }
  // Columns j ≥ 1 of M₁ agree with B and settle at β_j by construction.
  std::map<std::size_t, Scalar> row0;
  row0.emplace(0, c[0]);
  for (const auto& [j, v] : m1.limits()) row0.emplace(j, v);
  LMatrix a = unstep_add_row0(unstep_drop_row0(m1, std::move(row0)));
  if (!(embed_F(a) == b)) throw InvariantError("reconstructed preimage does not map back onto the input");
  out.verdict = Preimage{std::move(a)};
  return out;
}

bool in_band_B(const CoverMatrix& b) {
  for (const auto& [cell, v] : b.explicit_entries()) {
    if (cell.second == 0) return false;
  }
  return std::all_of(b.tail_col0().begin(), b.tail_col0().end(), [](const Scalar& v) { return v.is_zero(); });
}

YocResult in_Yoc(const CoverMatrix& b, const std::optional<LMatrix>& witness) {
  YocResult out;
  const CoverMatrix mag = abs(b);
  if (witness) {
    if (!lmat_is_order_continuous(*witness).order_continuous) {
      out.reason = "supplied witness is not order continuous";
      return out;
    }
    if (!cover_leq(mag, embed_F(*witness))) {
      out.reason = "supplied witness does not dominate |B|";
      return out;
    }
    out.membership = Membership::member;
    out.witness = witness;
    out.reason = "|B| <= F(A) for the supplied A in N";
    return out;
  }
  if (!in_band_B(b)) {
    out.membership = Membership::not_member;
    out.reason = "F(A) has zero 0th column for every A in N, so |B| <= F(A) forces b_i0 = 0";
    return out;
  }
  // Pad the diagonal of |B|'s tail blocks until every tail row has the same
  // sum; reversing (III) then yields a constant 0th column, hence a preimage.
  const BlockTail& t = mag.tail();
  const std::size_t p = t.period();
  Scalar widest;
  for (std::size_t r = 0; r < p; ++r) widest = max(widest, t.row_sum(r));
  std::vector<Scalar> cells = t.cells();
  for (std::size_t r = 0; r < p; ++r) cells[r * p + r] += widest - t.row_sum(r);
  const CoverMatrix dominant(mag.rows(), mag.cols(), mag.explicit_entries(), mag.limits(),
                             make_tail(p, std::move(cells)));
  const PreimageCertificate cert = preimage_solve(dominant);
  const auto* pre = std::get_if<Preimage>(&cert.verdict);
  if (pre == nullptr || !lmat_is_order_continuous(pre->matrix).order_continuous) {
    out.reason = "dominating construction left the representable class";
    return out;
  }
  out.membership = Membership::member;
  out.witness = pre->matrix;
  out.reason = "|B| <= F(A) for the constructed A in N";
  return out;
}

LMatrix example22_P() {
  return LMatrix(1, 1, {{{0, 0}, Scalar(2)}, {{0, 1}, Scalar(1)}, {{1, 1}, Scalar(1)}}, BlockTail::identity());
}

LMatrix example22_Q() {
  return LMatrix(1, 1, {{{0, 0}, Scalar(2)}, {{0, 1}, Scalar(1)}, {{1, 1}, Scalar(1)}},
                 make_tail(2, {Scalar(0), Scalar(1), Scalar(0), Scalar(1)}));
}

}  // namespace preriesz
