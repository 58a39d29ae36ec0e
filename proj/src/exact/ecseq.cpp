#include "preriesz/ecseq.hpp"

#include <sstream>

#include "preriesz/detail/cursor.hpp"
#include "preriesz/error.hpp"

namespace preriesz {

EcSeq::EcSeq(std::vector<Scalar> prefix, Scalar tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  canonicalize();
}

EcSeq EcSeq::constant(Scalar c) { return EcSeq({}, std::move(c)); }

EcSeq EcSeq::unit(std::size_t i) {
  if (i == 0) throw InvariantError("e_i is indexed from 1");
  std::vector<Scalar> p(i);
  p[i - 1] = 1;
  return EcSeq(std::move(p), 0);
}

EcSeq EcSeq::ones_from(std::size_t n) {
  if (n == 0) throw InvariantError("sequence indices start at 1");
  return EcSeq(std::vector<Scalar>(n - 1), 1);
}

void EcSeq::canonicalize() {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Scalar EcSeq::at(std::size_t n) const {
  if (n == 0) throw InvariantError("sequence indices start at 1");
  return n <= prefix_.size() ? prefix_[n - 1] : tail_;
}

std::string EcSeq::str() const {
  std::ostringstream os;
  os << "ec: [";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ", ";
    os << prefix_[i];
  }
  os << "] tail " << tail_;
  return os.str();
}

EcSeq EcSeq::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect_word("ec:");
  cur.expect('[');
  std::vector<Scalar> prefix;
  if (!cur.consume(']')) {
    do {
      prefix.push_back(cur.scalar());
    } while (cur.consume(','));
    cur.expect(']');
  }
  cur.expect_word("tail");
  Scalar tail = cur.scalar();
  if (!cur.at_end()) cur.fail("trailing characters");
  return EcSeq(std::move(prefix), std::move(tail));
}

EcSeq EcSeq::operator-() const {
  EcSeq r = *this;
  for (auto& v : r.prefix_) v = -v;
  r.tail_ = -r.tail_;
  return r;
}

EcSeq& EcSeq::operator+=(const EcSeq& o) {
  return *this = pointwise(*this, o, [](const Scalar& a, const Scalar& b) { return a + b; });
}

EcSeq& EcSeq::operator-=(const EcSeq& o) {
  return *this = pointwise(*this, o, [](const Scalar& a, const Scalar& b) { return a - b; });
}

EcSeq& EcSeq::operator*=(const Scalar& c) {
  for (auto& v : prefix_) v *= c;
  tail_ *= c;
  canonicalize();
  return *this;
}

EcSeq abs(const EcSeq& x) {
  std::vector<Scalar> p;
  p.reserve(x.prefix().size());
  for (const auto& v : x.prefix()) p.push_back(v.abs());
  return EcSeq(std::move(p), x.tail().abs());
}

OrderRelation ec_compare(const EcSeq& a, const EcSeq& b) {
  OrderRelation r{true, true};
  const std::size_t n = std::max(a.prefix().size(), b.prefix().size());
  for (std::size_t i = 1; i <= n + 1; ++i) {
    const auto c = a.at(i) <=> b.at(i);
    if (c > 0) r.leq = false;
    if (c < 0) r.geq = false;
  }
  return r;
}

EcSeq ec_lattice(const EcSeq& a, const EcSeq& b, LatticeOp which) {
  if (which == LatticeOp::meet) {
    return EcSeq::pointwise(a, b, [](const Scalar& x, const Scalar& y) { return min(x, y); });
  }
  return EcSeq::pointwise(a, b, [](const Scalar& x, const Scalar& y) { return max(x, y); });
}

bool disjoint(const EcSeq& a, const EcSeq& b) { return meet(abs(a), abs(b)) == EcSeq{}; }

bool disjoint_by_upper_sets(const EcSeq& a, const EcSeq& b) {
  // {u, -u}^u = {z : z >= |u|}; two such sets coincide iff the generators do.
  return abs(a + b) == abs(a - b);
}

BasisCoords ec_to_basis(const EcSeq& x) {
  BasisCoords c;
  c.lambda0 = x.tail();
  for (std::size_t i = 1; i <= x.prefix().size(); ++i) {
    Scalar d = x.at(i) - x.tail();
    if (!d.is_zero()) c.lambdas.emplace(i, std::move(d));
  }
  return c;
}

EcSeq basis_to_ec(const BasisCoords& c) {
  std::size_t n = c.lambdas.empty() ? 0 : c.lambdas.rbegin()->first;
  std::vector<Scalar> p(n, c.lambda0);
  for (const auto& [i, v] : c.lambdas) {
    if (i == 0) throw InvariantError("basis coordinates are indexed from 1");
    p[i - 1] += v;
  }
  return EcSeq(std::move(p), c.lambda0);
}

}  // namespace preriesz
