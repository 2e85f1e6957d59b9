// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision Integer and Rational scalars.
//
// Both are thin value wrappers over boost::multiprecision (cpp_int backend,
// expression templates off).  The wrappers exist so that Eigen sees plain
// scalar types with non-template operators; boost's own operator templates
// collide with Eigen's scalar-promotion overloads.
#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include "splitjac/errors.hpp"

namespace splitjac {

namespace mp = boost::multiprecision;

class Integer {
 public:
  using Big = mp::number<mp::cpp_int_backend<>, mp::et_off>;

  Integer() = default;
  Integer(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Big v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer.
  static Integer parse(std::string_view text);

  const Big& big() const noexcept { return v_; }
  int sign() const noexcept { return v_.sign(); }
  bool is_zero() const noexcept { return v_.is_zero(); }
  std::string str() const { return v_.str(); }
  /// Narrowing conversion; throws NotIntegral if the value does not fit.
  long long to_ll() const;

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(a.v_ + b.v_); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(a.v_ - b.v_); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(a.v_ * b.v_); }
  /// Truncating division, as in C++ for built-in integers.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);
  Integer operator-() const { return Integer(-v_); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Big v_{0};
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

/// Exact rational number, always held in lowest terms with a positive
/// denominator (the backend canonicalizes after every operation).
class Rational {
 public:
  using Big = mp::number<mp::cpp_rational_backend, mp::et_off>;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.big()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(Big v) : v_(std::move(v)) {}

  /// Accepts "p", "p/q" and finite decimals such as "-1.25"; never rounds.
  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(Integer::Big(mp::numerator(v_))); }
  Integer denominator() const { return Integer(Integer::Big(mp::denominator(v_))); }
  bool is_integer() const { return mp::denominator(v_) == 1; }
  /// Throws NotIntegral unless the denominator is 1.
  Integer to_integer() const;
  int sign() const noexcept { return v_.sign(); }
  bool is_zero() const noexcept { return v_.is_zero(); }
  /// "p/q", or "p" when q = 1.
  std::string str() const;
  const Big& big() const noexcept { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

 private:
  Big v_{0};
};

Rational abs(const Rational& a);

}  // namespace splitjac

namespace Eigen {

template <>
struct NumTraits<splitjac::Integer> : GenericNumTraits<splitjac::Integer> {
  using Real = splitjac::Integer;
  using NonInteger = splitjac::Rational;
  using Nested = splitjac::Integer;
  using Literal = splitjac::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static int digits10() { return 0; }
};

template <>
struct NumTraits<splitjac::Rational> : GenericNumTraits<splitjac::Rational> {
  using Real = splitjac::Rational;
  using NonInteger = splitjac::Rational;
  using Nested = splitjac::Rational;
  using Literal = splitjac::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32,
  };
  static int digits10() { return 0; }
};

namespace internal {
// Eigen's scalar_cast_op falls back to static_cast; spell out Integer -> Rational.
template <>
struct cast_impl<splitjac::Integer, splitjac::Rational> {
  static splitjac::Rational run(const splitjac::Integer& x) { return splitjac::Rational(x); }
};
}  // namespace internal

}  // namespace Eigen
