#include "preriesz/goperator.hpp"

#include <algorithm>
#include <cmath>

#include "preriesz/detail/cursor.hpp"
#include "preriesz/detail/lines.hpp"
#include "preriesz/error.hpp"

namespace preriesz {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string list_str(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != 0) out += ", ";
    out += v[k].str();
  }
  return out + "]";
}

std::vector<Scalar> parse_list(detail::Cursor& cur) {
  std::vector<Scalar> out;
  cur.expect('[');
  if (cur.consume(']')) return out;
  do {
    out.push_back(cur.scalar());
  } while (cur.consume(','));
  cur.expect(']');
  return out;
}

void validate(const BoundedSeq& s) {
  if (const auto* ep = std::get_if<EventuallyPeriodic>(&s); ep && ep->cycle.empty()) {
    throw InvariantError("periodic sequence needs a nonempty cycle");
  }
  if (const auto* ts = std::get_if<TriSlot>(&s); ts && ts->index == 0) {
    throw InvariantError("slot indices start at 1");
  }
}

}  // namespace

std::size_t triangular(std::size_t k) { return k * (k + 1) / 2; }

std::size_t tri_block(std::size_t p) {
  if (p == 0) throw InvariantError("positions start at 1");
  auto k = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(p) + 1.0) - 1.0) / 2.0);
  while (triangular(k) < p) ++k;
  while (k > 0 && triangular(k - 1) >= p) --k;
  return k;
}

std::size_t tri_slot(std::size_t p) { return p - triangular(tri_block(p) - 1); }

Scalar seq_at(const BoundedSeq& s, std::size_t p) {
  if (p == 0) throw InvariantError("positions start at 1");
  return std::visit(overloaded{
                        [&](const EcSeq& x) { return x.at(p); },
                        [&](const EventuallyPeriodic& x) {
                          if (p <= x.prefix.size()) return x.prefix[p - 1];
                          return x.cycle[(p - x.prefix.size() - 1) % x.cycle.size()];
                        },
                        [&](const TriSlot& x) { return Scalar(tri_slot(p) == x.index ? 1 : 0); },
                    },
                    s);
}

Scalar seq_limsup(const BoundedSeq& s) {
  return std::visit(overloaded{
                        [](const EcSeq& x) { return x.tail(); },
                        [](const EventuallyPeriodic& x) { return *std::max_element(x.cycle.begin(), x.cycle.end()); },
                        [](const TriSlot&) { return Scalar(1); },
                    },
                    s);
}

Scalar seq_liminf(const BoundedSeq& s) {
  return std::visit(overloaded{
                        [](const EcSeq& x) { return x.tail(); },
                        [](const EventuallyPeriodic& x) { return *std::min_element(x.cycle.begin(), x.cycle.end()); },
                        [](const TriSlot&) { return Scalar(0); },
                    },
                    s);
}

Scalar seq_sup_abs(const BoundedSeq& s) {
  const auto sup_of = [](Scalar acc, const std::vector<Scalar>& v) {
    for (const auto& x : v) acc = max(acc, x.abs());
    return acc;
  };
  return std::visit(overloaded{
                        [&](const EcSeq& x) { return sup_of(x.tail().abs(), x.prefix()); },
                        [&](const EventuallyPeriodic& x) { return sup_of(sup_of(Scalar{}, x.prefix), x.cycle); },
                        [](const TriSlot&) { return Scalar(1); },
                    },
                    s);
}

std::string seq_str(const BoundedSeq& s) {
  return std::visit(overloaded{
                        [](const EcSeq& x) { return x.str(); },
                        [](const EventuallyPeriodic& x) {
                          return "periodic: " + list_str(x.prefix) + " period " + list_str(x.cycle);
                        },
                        [](const TriSlot& x) { return "trislot " + std::to_string(x.index); },
                    },
                    s);
}

BoundedSeq parse_bounded_seq(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.peek_word("ec:")) return EcSeq::parse(text);
  BoundedSeq out;
  if (cur.consume_word("periodic:")) {
    EventuallyPeriodic ep;
    ep.prefix = parse_list(cur);
    cur.expect_word("period");
    ep.cycle = parse_list(cur);
    if (ep.cycle.empty()) cur.fail("period cycle must be nonempty");
    out = std::move(ep);
  } else if (cur.consume_word("trislot")) {
    const std::size_t i = cur.natural();
    if (i == 0) cur.fail("slot indices start at 1");
    out = TriSlot{i};
  } else {
    cur.fail("expected 'ec:', 'periodic:' or 'trislot'");
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return out;
}

GOperator::GOperator(BoundedSeq one, std::map<std::size_t, BoundedSeq> columns, std::optional<ColumnRule> rule)
    : one_(std::move(one)), columns_(std::move(columns)), rule_(std::move(rule)) {
  validate(one_);
  for (const auto& [i, s] : columns_) {
    if (i == 0) throw InvariantError("column indices start at 1");
    validate(s);
  }
  if (rule_) {
    const std::size_t start = rule_start();
    if (start == 0) throw InvariantError("rule must start at a positive column");
    if (!columns_.empty() && columns_.rbegin()->first >= start) {
      throw InvariantError("explicit columns must precede the rule");
    }
    if (const auto* b = std::get_if<BlockColumnRule>(&*rule_); b && b->row_origin == 0) {
      throw InvariantError("block rows start at position 1 or later");
    }
  }
}

std::size_t GOperator::rule_start() const {
  if (rule_) {
    return std::visit(overloaded{
                          [](const TriSlotRule& r) { return r.start; },
                          [](const BlockColumnRule& r) { return r.col_origin; },
                      },
                      *rule_);
  }
  return columns_.empty() ? 1 : columns_.rbegin()->first + 1;
}

Scalar GOperator::e_at(std::size_t i, std::size_t p) const {
  if (const auto it = columns_.find(i); it != columns_.end()) return seq_at(it->second, p);
  if (!rule_ || i < rule_start()) return {};
  return std::visit(overloaded{
                        [&](const TriSlotRule&) { return Scalar(tri_slot(p) == i ? 1 : 0); },
                        [&](const BlockColumnRule& r) {
                          if (p < r.row_origin) return Scalar{};
                          return r.tail.entry(p - r.row_origin, i - r.col_origin);
                        },
                    },
                    *rule_);
}

Scalar GOperator::e_limsup(std::size_t i) const {
  if (const auto it = columns_.find(i); it != columns_.end()) return seq_limsup(it->second);
  if (!rule_ || i < rule_start()) return {};
  // A block column is supported on a single block of rows.
  return std::holds_alternative<TriSlotRule>(*rule_) ? Scalar(1) : Scalar{};
}

std::vector<std::pair<std::size_t, Scalar>> GOperator::row(std::size_t p) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [i, s] : columns_) {
    Scalar v = seq_at(s, p);
    if (!v.is_zero()) out.emplace_back(i, std::move(v));
  }
  if (!rule_) return out;
  std::visit(overloaded{
                 [&](const TriSlotRule& r) {
                   const std::size_t slot = tri_slot(p);
                   if (slot >= r.start) out.emplace_back(slot, Scalar(1));
                 },
                 [&](const BlockColumnRule& r) {
                   if (p < r.row_origin) return;
                   const std::size_t per = r.tail.period();
                   const std::size_t rel = p - r.row_origin;
                   const std::size_t base = r.col_origin + (rel / per) * per;
                   for (auto& [c, v] : r.tail.row_entries(rel % per)) out.emplace_back(base + c, std::move(v));
                 },
             },
             *rule_);
  return out;
}

bool GOperator::uses_trislot() const {
  if (std::holds_alternative<TriSlot>(one_)) return true;
  for (const auto& [i, s] : columns_) {
    if (std::holds_alternative<TriSlot>(s)) return true;
  }
  return rule_ && std::holds_alternative<TriSlotRule>(*rule_);
}

std::string GOperator::str() const {
  std::string out = "gop one " + seq_str(one_) + "\n";
  for (const auto& [i, s] : columns_) out += "gop e " + std::to_string(i) + " " + seq_str(s) + "\n";
  if (rule_) {
    std::visit(overloaded{
                   [&](const TriSlotRule& r) {
                     out += "gop e * trislot";
                     if (r.start != (columns_.empty() ? 1 : columns_.rbegin()->first + 1)) out += " from " + std::to_string(r.start);
                     out += "\n";
                   },
                   [&](const BlockColumnRule& r) {
                     out += "gop e * blocktail " + std::to_string(r.row_origin) + " " + std::to_string(r.col_origin) +
                            " " + std::to_string(r.tail.period()) + "\n";
                     for (std::size_t a = 0; a < r.tail.period(); ++a) {
                       for (std::size_t b = 0; b < r.tail.period(); ++b) {
                         if (b != 0) out += ' ';
                         out += r.tail.cell(a, b).str();
                       }
                       out += '\n';
                     }
                   },
               },
               *rule_);
  }
  return out;
}

GOperator GOperator::parse(std::string_view text) {
  detail::LineSource src(text);
  std::optional<BoundedSeq> one;
  std::map<std::size_t, BoundedSeq> columns;
  std::optional<ColumnRule> rule;
  std::optional<std::size_t> trislot_from;
  bool trislot_rule = false;
  while (auto line = src.next()) {
    detail::Cursor cur(line->text);
    detail::at_line(*line, [&] {
      cur.expect_word("gop");
      if (cur.consume_word("one")) {
        if (one) cur.fail("duplicate 'gop one' line");
        one = parse_bounded_seq(cur.rest());
        return;
      }
      cur.expect_word("e");
      if (cur.consume('*')) {
        if (rule || trislot_rule) cur.fail("duplicate column rule");
        if (cur.consume_word("trislot")) {
          trislot_rule = true;
          if (cur.consume_word("from")) trislot_from = cur.natural();
          if (!cur.at_end()) cur.fail("trailing characters");
          return;
        }
        cur.expect_word("blocktail");
        BlockColumnRule r;
        r.row_origin = cur.natural();
        r.col_origin = cur.natural();
        const std::size_t per = cur.natural();
        if (per == 0) cur.fail("block size must be positive");
        if (!cur.at_end()) cur.fail("trailing characters");
        std::vector<Scalar> cells;
        for (std::size_t a = 0; a < per; ++a) {
          const detail::Line row = src.require("a block row");
          detail::at_line(row, [&] {
            detail::Cursor rc(row.text);
            for (std::size_t b = 0; b < per; ++b) cells.push_back(rc.scalar());
            if (!rc.at_end()) rc.fail("block row has more than " + std::to_string(per) + " entries");
          });
        }
        r.tail = make_tail(per, std::move(cells));
        rule = std::move(r);
        return;
      }
      const std::size_t i = cur.natural();
      if (i == 0) cur.fail("column indices start at 1");
      if (!columns.emplace(i, parse_bounded_seq(cur.rest())).second) cur.fail("duplicate column");
    });
  }
  if (!one) throw FormatError(src.last_line() == 0 ? 1 : src.last_line(), "missing 'gop one' line");
  if (trislot_rule) {
    rule = TriSlotRule{trislot_from.value_or(columns.empty() ? 1 : columns.rbegin()->first + 1)};
  }
  try {
    return GOperator(std::move(*one), std::move(columns), std::move(rule));
  } catch (const InvariantError& e) {
    throw FormatError(src.last_line() == 0 ? 1 : src.last_line(), e.what());
  }
}

GOperator build_T_example21() { return GOperator(EcSeq::constant(1), {}, TriSlotRule{1}); }

GOperator induced_operator(const LMatrix& a) {
  const auto column = [&](std::size_t j) {
    std::vector<Scalar> prefix;
    const Scalar top = a.entry(0, j);
    for (std::size_t i = 1; i <= a.rows(); ++i) prefix.push_back(top + a.entry(i, j));
    return EcSeq(std::move(prefix), top);
  };
  std::map<std::size_t, BoundedSeq> columns;
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    EcSeq c = column(j);
    if (c != EcSeq{}) columns.emplace(j, std::move(c));
  }
  std::optional<ColumnRule> rule;
  if (!a.tail().is_zero()) rule = BlockColumnRule{a.rows() + 1, a.cols() + 1, a.tail()};
  return GOperator(column(0), std::move(columns), std::move(rule));
}

std::size_t rowwise_horizon(const GOperator& t) {
  std::size_t h = 0;
  std::size_t period = 1;
  std::size_t max_slot = 0;
  const auto account = [&](const BoundedSeq& s) {
    std::visit(overloaded{
                   [&](const EcSeq& x) { h = std::max(h, x.prefix().size()); },
                   [&](const EventuallyPeriodic& x) {
                     h = std::max(h, x.prefix.size());
                     period = lcm_size(period, x.cycle.size());
                   },
                   [&](const TriSlot& x) { max_slot = std::max(max_slot, x.index); },
               },
               s);
  };
  account(t.img_one());
  for (const auto& [i, s] : t.columns()) account(s);
  if (t.rule()) {
    std::visit(overloaded{
                   [&](const TriSlotRule& r) { max_slot = std::max(max_slot, r.start - 1); },
                   [&](const BlockColumnRule& r) {
                     h = std::max(h, r.row_origin - 1);
                     period = lcm_size(period, r.tail.period());
                   },
               },
               *t.rule());
  }
  if (!t.uses_trislot()) return h + period;
  // Past position h a row is determined by its residue mod `period` and by its
  // slot when the slot is at most max_slot. Blocks k ≥ max_slot + period
  // realise every residue among their generic slots, and the residue of a
  // fixed slot is periodic in k with period 2·period.
  std::size_t k_h = 1;
  while (triangular(k_h - 1) < h) ++k_h;
  const std::size_t k0 = std::max(k_h, max_slot + period);
  return triangular(k0 + 2 * period);
}

RowwiseResult gop_rowwise_check(const GOperator& t, RowwiseMode mode, std::size_t budget) {
  RowwiseResult out;
  const std::size_t end = rowwise_horizon(t);
  if (end > budget) {
    out.decision = Decision::undecidable;
    out.note = "undecidable for this representation: " + std::to_string(end) + " positions exceed the budget of " +
               std::to_string(budget);
    return out;
  }
  for (std::size_t p = 1; p <= end; ++p) {
    out.positions_checked = p;
    Scalar sum;
    std::optional<std::size_t> negative;
    for (const auto& [i, v] : t.row(p)) {
      if (v.sign() < 0 && !negative) negative = i;
      sum += v;
    }
    Scalar one = t.one_at(p);
    bool bad = false;
    if (mode == RowwiseMode::positive) {
      bad = negative.has_value() || sum > one;
    } else {
      negative.reset();
      bad = sum != one;
    }
    if (bad) {
      out.decision = Decision::fails;
      out.witness = RowwiseResult::Witness{p, negative, std::move(sum), std::move(one)};
      return out;
    }
  }
  return out;
}

}  // namespace preriesz
