#include "preriesz/scalar.hpp"

#include <cctype>
#include <ostream>

#include "preriesz/error.hpp"

namespace preriesz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InvariantError("zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= mpq_class(den, 1);
  v_.canonicalize();
}

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw FormatError("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw FormatError("zero denominator in scalar '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return v_.get_str(10); }

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(v_))); }

mpz_class Scalar::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvariantError("division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar inverse_power_of_two(std::size_t k) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(k);
  return Scalar(mpq_class(mpz_class(1), den));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace preriesz
