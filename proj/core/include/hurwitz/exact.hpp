#pragma once

// Exact integer and rational arithmetic backed by GMP.
//
// Rational values are kept in canonical form at all times: the denominator is
// positive and coprime to the numerator, so structural equality is value
// equality.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace hurwitz {

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Integer(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Parses a base-10 integer; throws ParseError on malformed text.
  static Integer from_string(std::string_view text);

  [[nodiscard]] const mpz_class& gmp() const noexcept { return v_; }
  [[nodiscard]] int sign() const noexcept { return sgn(v_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool fits_long() const noexcept { return v_.fits_slong_p(); }
  /// Throws DomainError when the value does not fit.
  [[nodiscard]] long to_long() const;
  [[nodiscard]] std::string str() const { return v_.get_str(); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

  /// Exact quotient; throws DomainError if `d` does not divide `*this`.
  [[nodiscard]] Integer divexact(const Integer& d) const;
  [[nodiscard]] bool divisible_by(const Integer& d) const;

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(Integer(v).gmp()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.gmp()) {}  // NOLINT(google-explicit-constructor)
  /// num/den reduced to lowest terms; throws DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "p/q" or "-p/q"; throws ParseError or DomainError (q == 0).
  static Rational from_string(std::string_view text);

  [[nodiscard]] Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  [[nodiscard]] Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const noexcept { return sgn(v_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  /// Numerator when the value is integral; throws DomainError otherwise.
  [[nodiscard]] Integer to_integer() const;
  /// "p/q", or "p" when q = 1.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const mpq_class& gmp() const noexcept { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

/// n!; DomainError for n < 0.
Integer factorial(long n);

/// C(n, k); 0 when k < 0 or k > n. DomainError for n < 0.
Integer binomial(long n, long k);

/// total! / prod(parts!); DomainError when a part is negative or the parts do
/// not sum to `total`.
Integer multinomial(long total, std::span<const long> parts);
Integer multinomial(long total, std::span<const int> parts);

/// base^exponent as an exact rational; DomainError for 0 to a negative power.
Rational ipow(const Integer& base, long exponent);
Rational ipow(const Rational& base, long exponent);

}  // namespace hurwitz
