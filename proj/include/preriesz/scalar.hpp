#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace preriesz {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class that fixes the
/// textual form ("p" or "p/q") used by every exchange file.
class Scalar {
 public:
  Scalar() = default;

  template <std::signed_integral I>
  Scalar(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Scalar(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Scalar(long num, long den);
  explicit Scalar(mpq_class v);

  /// Accepts `-?digits(/digits)?`; the denominator must be positive.
  static Scalar parse(std::string_view text);

  std::string str() const;
  const mpq_class& get() const noexcept { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;
  /// Largest integer not exceeding the value.
  mpz_class floor() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// 2^{-k}
Scalar inverse_power_of_two(std::size_t k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace preriesz
