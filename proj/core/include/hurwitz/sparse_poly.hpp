#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

/// Exact multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored, so two polynomials are equal
/// exactly when their term maps are equal.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;

  explicit SparsePoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly constant(std::size_t num_vars, const Rational& c);
  static SparsePoly variable(std::size_t num_vars, std::size_t index);
  /// Sum of the variables whose indices are listed.
  static SparsePoly linear_sum(std::size_t num_vars, std::span<const std::size_t> indices);
  /// Single term c * x^exponents.
  static SparsePoly monomial(const Exponents& exponents, const Rational& c = Rational(1));

  [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  /// Coefficient of x^exponents (zero if absent).
  [[nodiscard]] Rational coefficient(const Exponents& exponents) const;
  /// Highest total degree; -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;

  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  [[nodiscard]] SparsePoly pow(int exponent) const;
  [[nodiscard]] std::string str() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_compatible(const SparsePoly& o) const;

  std::size_t num_vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace hurwitz
