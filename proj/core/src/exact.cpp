#include "hurwitz/exact.hpp"

#include <ostream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer Integer::from_string(std::string_view text) {
  if (!is_decimal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const {
  if (!fits_long()) throw DomainError("integer " + str() + " does not fit in a machine word");
  return v_.get_si();
}

Integer Integer::divexact(const Integer& d) const {
  if (!divisible_by(d)) throw DomainError(str() + " is not divisible by " + d.str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(q));
}

bool Integer::divisible_by(const Integer& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num.gmp(), den.gmp());
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::from_string(text));
  const auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  return Rational(Integer::from_string(text.substr(0, slash)), Integer::from_string(den));
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
  return numerator();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(std::move(r));
}

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

namespace {

template <typename T>
Integer multinomial_impl(long total, std::span<const T> parts) {
  long sum = 0;
  for (T p : parts) {
    if (p < 0) throw DomainError("multinomial with negative part");
    sum += static_cast<long>(p);
  }
  if (sum != total) {
    throw DomainError("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                      std::to_string(total));
  }
  // Product of sequential binomials keeps every intermediate integral.
  Integer r(1);
  long used = 0;
  for (T p : parts) {
    used += static_cast<long>(p);
    r *= binomial(used, static_cast<long>(p));
  }
  return r;
}

}  // namespace

Integer multinomial(long total, std::span<const long> parts) { return multinomial_impl(total, parts); }
Integer multinomial(long total, std::span<const int> parts) { return multinomial_impl(total, parts); }

Rational ipow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to negative power");
    return Rational(1) / ipow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.gmp().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.gmp().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(Integer(std::move(num)), Integer(std::move(den)));
}

Rational ipow(const Integer& base, long exponent) { return ipow(Rational(base), exponent); }

}  // namespace hurwitz
