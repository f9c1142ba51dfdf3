#include "hurwitz/identities.hpp"

#include <bit>
#include <map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rational PointAssignment::total() const {
  Rational s;
  for (const auto& v : values) s += v;
  return s;
}

Rational PointAssignment::subset_sum(unsigned long mask) const {
  Rational s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (mask >> i & 1UL) s += values[i];
  }
  return s;
}

std::string PointAssignment::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  return out + ")";
}

namespace {

void require_nonzero_values(const PointAssignment& t) {
  for (const auto& v : t.values) {
    if (v.is_zero()) throw DomainError("assignment " + t.str() + " has a zero value");
  }
}

Rational reciprocal_sum(const PointAssignment& t) {
  Rational s;
  for (const auto& v : t.values) s += Rational(1) / v;
  return s;
}

constexpr int kMaxEvaluationSet = 20;

}  // namespace

Rational kazarian_lhs(const PointAssignment& t) {
  const std::size_t m = t.size();
  if (m < 2) throw DomainError("ordered splits need |M| >= 2");
  if (m > kMaxEvaluationSet) throw ResourceError("split sum over more than 2^20 subsets");
  require_nonzero_values(t);
  const unsigned long full = (1UL << m) - 1;
  Rational sum;
  for (unsigned long mask = 1; mask < full; ++mask) {
    const long i = std::popcount(mask);
    const long j = static_cast<long>(m) - i;
    sum += ipow(t.subset_sum(mask), i - 2) * ipow(t.subset_sum(full & ~mask), j - 2);
  }
  return sum;
}

Rational kazarian_rhs(const PointAssignment& t) {
  require_nonzero_values(t);
  const long m = static_cast<long>(t.size());
  const Rational tm = t.total();
  if (m < 4 && tm.is_zero()) throw DomainError("t_M = 0 with |M| < 4");
  return ipow(tm, m - 4) * (Rational(2) * tm * reciprocal_sum(t) - Rational((m - 2) * (m - 3)));
}

ClearedForms kazarian_cleared_forms(int m) {
  if (m < 2 || m > 7) throw ResourceError("symbolic split identity supported for 2 <= m <= 7");
  const auto vars = static_cast<std::size_t>(m);
  const unsigned long full = (1UL << m) - 1;

  std::map<unsigned long, SparsePoly> power_cache;  // t_S^{|S|-2}, |S| >= 2
  const auto side_power = [&](unsigned long mask) -> const SparsePoly& {
    auto it = power_cache.find(mask);
    if (it != power_cache.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < vars; ++i) {
      if (mask >> i & 1UL) idx.push_back(i);
    }
    auto p = SparsePoly::linear_sum(vars, idx).pow(static_cast<int>(idx.size()) - 2);
    return power_cache.emplace(mask, std::move(p)).first->second;
  };

  SparsePoly lhs(vars);
  for (unsigned long mask = 1; mask < full; ++mask) {
    SparsePoly::Exponents e(vars, 1);
    SparsePoly factor = SparsePoly::constant(vars, Rational(1));
    for (unsigned long side : {mask, full & ~mask}) {
      if (std::popcount(side) == 1) {
        --e[static_cast<std::size_t>(std::countr_zero(side))];
      } else {
        factor *= side_power(side);
      }
    }
    lhs += factor * SparsePoly::monomial(e);
  }

  std::vector<std::size_t> all(vars);
  for (std::size_t i = 0; i < vars; ++i) all[i] = i;
  const SparsePoly tm = SparsePoly::linear_sum(vars, all);
  if (m < 4) lhs *= tm.pow(4 - m);

  SparsePoly e_top = SparsePoly::monomial(SparsePoly::Exponents(vars, 1));
  SparsePoly e_next(vars);
  for (std::size_t i = 0; i < vars; ++i) {
    SparsePoly::Exponents e(vars, 1);
    e[i] = 0;
    e_next += SparsePoly::monomial(e);
  }
  const Rational c = Rational(static_cast<long>((m - 2) * (m - 3)));
  SparsePoly rhs = tm.pow(m >= 4 ? m - 4 : 0) * (Rational(2) * (tm * e_next) - c * e_top);
  return {std::move(lhs), std::move(rhs)};
}

bool kazarian_cleared_check(int m) {
  const auto forms = kazarian_cleared_forms(m);
  return forms.lhs == forms.rhs;
}

Rational l42_difference(const PointAssignment& t) {
  const long m = static_cast<long>(t.size());
  const Rational lhs = kazarian_lhs(t);
  const Rational tm = t.total();
  if (m < 3 && tm.is_zero()) throw DomainError("t_M = 0 with |M| < 3");
  return lhs - Rational(2) * ipow(tm, m - 3) * reciprocal_sum(t);
}

bool l42_sum_dependence_check(std::span<const std::pair<PointAssignment, PointAssignment>> pairs) {
  for (const auto& [a, b] : pairs) {
    if (a.size() != b.size()) throw DomainError("pair " + a.str() + " / " + b.str() + " differs in length");
    if (a.total() != b.total()) throw DomainError("pair " + a.str() + " / " + b.str() + " differs in sum");
  }
  for (const auto& [a, b] : pairs) {
    if (l42_difference(a) != l42_difference(b)) return false;
  }
  return true;
}

Rational abel_set_poly(int subset_size, const Rational& t_sum, const Rational& x) {
  if (subset_size < 0) throw DomainError("negative set size");
  if (subset_size == 0) {
    if (x.is_zero()) throw DomainError("P_empty(x) = x * x^{-1} needs x != 0");
    return Rational(1);
  }
  return x * ipow(x + t_sum, subset_size - 1);
}

std::pair<Rational, Rational> abel_set_binomial_sides(const PointAssignment& t, const Rational& x,
                                                      const Rational& y) {
  if (x.is_zero() || y.is_zero() || (x + y).is_zero()) {
    throw DomainError("Abel set identity needs x, y, x + y non-zero");
  }
  const std::size_t m = t.size();
  if (m > kMaxEvaluationSet) throw ResourceError("Abel set sum over more than 2^20 subsets");
  const unsigned long full = (1UL << m) - 1;
  Rational lhs;
  for (unsigned long mask = 0; mask <= full; ++mask) {
    const int i = std::popcount(mask);
    const int j = static_cast<int>(m) - i;
    lhs += abel_set_poly(i, t.subset_sum(mask), x) / x *
           (abel_set_poly(j, t.subset_sum(full & ~mask), y) / y);
  }
  const Rational rhs = abel_set_poly(static_cast<int>(m), t.total(), x + y) / (x * y);
  return {lhs, rhs};
}

bool abel_set_binomial_check(const PointAssignment& t, const Rational& x, const Rational& y) {
  const auto [lhs, rhs] = abel_set_binomial_sides(t, x, y);
  return lhs == rhs;
}

bool abel_set_binomial_symbolic(int m) {
  if (m < 0 || m > 6) throw ResourceError("symbolic Abel set identity supported for 0 <= m <= 6");
  const auto vars = static_cast<std::size_t>(m) + 2;
  const std::size_t xi = vars - 2, yi = vars - 1;
  const SparsePoly x = SparsePoly::variable(vars, xi);
  const SparsePoly y = SparsePoly::variable(vars, yi);
  const unsigned long full = (1UL << m) - 1;

  const auto set_poly = [&](unsigned long mask, const SparsePoly& arg) {
    const int size = std::popcount(mask);
    if (size == 0) return SparsePoly::constant(vars, Rational(1));
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      if (mask >> i & 1UL) idx.push_back(i);
    }
    return arg * (arg + SparsePoly::linear_sum(vars, idx)).pow(size - 1);
  };

  SparsePoly lhs(vars);
  for (unsigned long mask = 0; mask <= full; ++mask) lhs += set_poly(mask, x) * set_poly(full & ~mask, y);
  return lhs == set_poly(full, x + y);
}

bool abel_classical_check(int n) {
  if (n < 1 || n > 12) throw ResourceError("classical Abel identity supported for 1 <= n <= 12");
  const SparsePoly x = SparsePoly::variable(2, 0);
  const SparsePoly y = SparsePoly::variable(2, 1);
  const auto abel = [](const SparsePoly& v, int i) {
    if (i == 0) return SparsePoly::constant(2, Rational(1));
    return v * (v + SparsePoly::constant(2, Rational(i))).pow(i - 1);
  };
  const SparsePoly lhs = (x + y) * (x + y + SparsePoly::constant(2, Rational(n))).pow(n - 1);
  SparsePoly rhs(2);
  for (int i = 0; i <= n; ++i) rhs += Rational(binomial(n, i)) * (abel(x, i) * abel(y, n - i));
  return lhs == rhs;
}

std::pair<Rational, Rational> split_coefficient_identity(int m) {
  if (m < 2) throw DomainError("coefficient identity needs m >= 2");
  Rational lhs;
  for (long i = 1; i < m; ++i) {
    const long j = m - i;
    lhs += Rational(binomial(m, i)) * ipow(Integer(i), i - 2) * ipow(Integer(j), j - 2);
  }
  const long mm = m;
  const Rational rhs = ipow(Integer(mm), mm - 4) * Rational(mm * mm + 5 * mm - 6);
  return {lhs, rhs};
}

Rational random_nonzero_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(1, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  std::bernoulli_distribution negative(0.5);
  const int p = num(rng);
  const int q = den(rng);
  return Rational(Integer(negative(rng) ? -p : p), Integer(q));
}

PointAssignment random_assignment(std::mt19937_64& rng, std::size_t m, bool nonzero_total,
                                  int max_numerator, int max_denominator) {
  PointAssignment t;
  do {
    t.values.clear();
    for (std::size_t i = 0; i < m; ++i) {
      t.values.push_back(random_nonzero_rational(rng, max_numerator, max_denominator));
    }
  } while (nonzero_total && t.total().is_zero());
  return t;
}

}  // namespace hurwitz
