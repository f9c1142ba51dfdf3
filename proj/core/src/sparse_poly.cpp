#include "hurwitz/sparse_poly.hpp"

#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

SparsePoly SparsePoly::constant(std::size_t num_vars, const Rational& c) {
  SparsePoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(e);
}

SparsePoly SparsePoly::linear_sum(std::size_t num_vars, std::span<const std::size_t> indices) {
  SparsePoly p(num_vars);
  for (auto i : indices) p += variable(num_vars, i);
  return p;
}

SparsePoly SparsePoly::monomial(const Exponents& exponents, const Rational& c) {
  for (int e : exponents) {
    if (e < 0) throw DomainError("negative exponent in polynomial monomial");
  }
  SparsePoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

Rational SparsePoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw DomainError("evaluation point has wrong dimension");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= ipow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

SparsePoly SparsePoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a polynomial");
  SparsePoly result = constant(num_vars_, Rational(1));
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (o.num_vars_ != num_vars_) throw DomainError("polynomials over different variable sets");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.num_vars_);
  SparsePoly::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace hurwitz
