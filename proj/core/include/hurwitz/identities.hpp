#pragma once

// Exact checks of the combinatorial identities behind the node-class degree:
// the ordered-split identity in variables t_1..t_m, the sum dependence of its difference term,
// Abel set polynomials of binomial type, the classical Abel identity and the
// resulting coefficient identity.

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/sparse_poly.hpp"

namespace hurwitz {

/// Values t_i indexed by the elements of a finite set M = {0..m-1}.
struct PointAssignment {
  std::vector<Rational> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  /// t_M, the sum of all values.
  [[nodiscard]] Rational total() const;
  /// t_I for the subset encoded by the bit mask.
  [[nodiscard]] Rational subset_sum(unsigned long mask) const;
  [[nodiscard]] std::string str() const;
};

/// sum over ordered splits I u J = M, both non-empty, of t_I^{|I|-2} t_J^{|J|-2}.
/// DomainError for m < 2 or any t_i = 0.
Rational kazarian_lhs(const PointAssignment& t);

/// t_M^{m-4} (2 t_M sum 1/t_i - (m-2)(m-3)).
/// DomainError for any t_i = 0, or t_M = 0 when m < 4.
Rational kazarian_rhs(const PointAssignment& t);

/// Both sides multiplied by prod t_i (and by t_M^{4-m} when m < 4), expanded
/// as polynomials in t_1..t_m.
struct ClearedForms {
  SparsePoly lhs;
  SparsePoly rhs;
};
/// ResourceError outside 2 <= m <= 7.
ClearedForms kazarian_cleared_forms(int m);
bool kazarian_cleared_check(int m);

/// kazarian_lhs(t) - 2 t_M^{m-3} sum 1/t_i, which depends only on t_M.
Rational l42_difference(const PointAssignment& t);

/// True iff l42_difference agrees on both members of every pair. DomainError
/// when a pair has different lengths or different sums.
bool l42_sum_dependence_check(std::span<const std::pair<PointAssignment, PointAssignment>> pairs);

/// P_M(x) = x (x + t_M)^{|M|-1} for a set of the given size; P_empty = 1.
/// DomainError for size 0 with x = 0, or a negative size.
Rational abel_set_poly(int subset_size, const Rational& t_sum, const Rational& x);

/// Both sides of sum_{I u J = M} (P_I(x)/x)(P_J(y)/y) = P_M(x+y)/(xy), I and J
/// possibly empty. DomainError when x, y or x + y is zero.
std::pair<Rational, Rational> abel_set_binomial_sides(const PointAssignment& t, const Rational& x,
                                                      const Rational& y);
bool abel_set_binomial_check(const PointAssignment& t, const Rational& x, const Rational& y);

/// Polynomial form sum P_I(x) P_J(y) = P_M(x+y) in t_1..t_m, x, y.
/// ResourceError outside 0 <= m <= 6.
bool abel_set_binomial_symbolic(int m);

/// (x+y)(x+y+n)^{n-1} = sum_i C(n,i) x(x+i)^{i-1} y(y+n-i)^{n-i-1} as
/// polynomials in x, y (the i = 0 factor is 1). ResourceError outside 1..12.
bool abel_classical_check(int n);

/// (sum_{i=1}^{m-1} C(m,i) i^{i-2} (m-i)^{m-i-2},  m^{m-4}(m^2 + 5m - 6)),
/// each side computed on its own. DomainError for m < 2.
std::pair<Rational, Rational> split_coefficient_identity(int m);

/// Random non-zero rationals p/q with |p| <= max_numerator, 1 <= q <= max_denominator.
/// With `nonzero_total`, resamples until t_M != 0.
PointAssignment random_assignment(std::mt19937_64& rng, std::size_t m, bool nonzero_total,
                                  int max_numerator = 12, int max_denominator = 7);
Rational random_nonzero_rational(std::mt19937_64& rng, int max_numerator = 12, int max_denominator = 7);

}  // namespace hurwitz
