// SPDX-License-Identifier: Apache-2.0
#include "splitjac/rational.hpp"

#include <cctype>
#include <limits>

namespace splitjac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::InvalidTav: return "InvalidTav";
    case ErrorKind::IncompatibleMorphism: return "IncompatibleMorphism";
    case ErrorKind::NotIsogeny: return "NotIsogeny";
    case ErrorKind::NotInducible: return "NotInducible";
    case ErrorKind::ImageConditionViolated: return "ImageConditionViolated";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::NonIntegralAdjoint: return "NonIntegralAdjoint";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::PositiveQ12: return "PositiveQ12";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::NotInSigma: return "NotInSigma";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::WrongK: return "WrongK";
    case ErrorKind::NonIntegralSlope: return "NonIntegralSlope";
    case ErrorKind::ConeCapExceeded: return "ConeCapExceeded";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(Big(s));
}

long long Integer::to_ll() const {
  if (v_ > std::numeric_limits<long long>::max() || v_ < std::numeric_limits<long long>::min())
    throw Error(ErrorKind::NotIntegral, "integer " + str() + " does not fit in 64 bits");
  return v_.convert_to<long long>();
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "integer division by zero");
  return Integer(a.v_ / b.v_);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "integer remainder by zero");
  return Integer(a.v_ % b.v_);
}

Integer abs(const Integer& a) { return Integer(mp::abs(a.big())); }

Integer gcd(const Integer& a, const Integer& b) { return Integer(Integer::Big(mp::gcd(a.big(), b.big()))); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((q * b != a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_ = den.sign() < 0 ? Big(-num.big(), -den.big()) : Big(num.big(), den.big());
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] { return Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'"); };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    const bool negative_den = !den.empty() && den.front() == '-';
    if (negative_den) den.remove_prefix(1);
    if (!all_digits(den)) throw fail();
    const Integer n = Integer::parse(text.substr(0, slash));
    const Integer d = Integer::parse(den);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return Rational(negative_den ? -n : n, d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw fail();
    bool negative = false;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if (!head.empty() && !all_digits(head)) throw fail();
    const Integer whole = head.empty() ? Integer(0) : Integer::parse(head);
    Integer scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(Integer::parse(frac), scale);
    return negative ? -r : r;
  }
  return Rational(Integer::parse(text));
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw Error(ErrorKind::NotIntegral, "rational " + str() + " is not an integer");
  return numerator();
}

std::string Rational::str() const {
  const auto& n = mp::numerator(v_);
  const auto& d = mp::denominator(v_);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  return Rational(a.v_ / b.v_);
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace splitjac
