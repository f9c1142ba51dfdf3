#include "hurwitz/moduli.hpp"

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void check_exponents(std::span<const int> exponents) {
  if (exponents.size() < 3) {
    throw DomainError("psi integral needs at least 3 marked points, got " +
                      std::to_string(exponents.size()));
  }
  for (int l : exponents) {
    if (l < 0) throw DomainError("psi integral with negative exponent");
  }
}

}  // namespace

Integer psi_integral(std::span<const int> exponents) {
  check_exponents(exponents);
  const long dim = static_cast<long>(exponents.size()) - 3;
  const long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
  if (total != dim) {
    throw DomainError("psi exponents sum to " + std::to_string(total) +
                      " but the moduli space has dimension " + std::to_string(dim));
  }
  return multinomial(dim, exponents);
}

Integer psi_integral_or_zero(std::span<const int> exponents) {
  check_exponents(exponents);
  const long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
  if (total != static_cast<long>(exponents.size()) - 3) return Integer(0);
  return multinomial(total, exponents);
}

Rational segre_degree(const Partition& kappa, int k) {
  const int m = kappa.length();
  if (m < 2) throw DomainError("segre_degree needs at least two poles");
  if (k < 0) throw DomainError("segre_degree with negative psi power");
  if (k > m - 2) return Rational(0);

  // Exponent vector on M_{0,m+1}: (l_1, ..., l_m, k) with sum(l) = m - 2 - k.
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  exps.back() = k;
  Integer sum(0);
  std::function<void(int, int, Integer)> rec = [&](int slot, int left, Integer weight) {
    if (slot == m - 1) {
      exps[static_cast<std::size_t>(slot)] = left;
      weight *= ipow(Integer(kappa[static_cast<std::size_t>(slot)]), left).to_integer();
      sum += weight * psi_integral(exps);
      return;
    }
    Integer w = weight;
    for (int l = 0; l <= left; ++l) {
      exps[static_cast<std::size_t>(slot)] = l;
      rec(slot + 1, left - l, w);
      w *= Integer(kappa[static_cast<std::size_t>(slot)]);
    }
  };
  rec(0, m - 2 - k, Integer(1));
  return prod_weight(kappa) * Rational(sum);
}

Rational deg_pzeta(const Partition& kappa) {
  return ipow(Integer(kappa.size()), kappa.length() - 2) * prod_weight(kappa);
}

Rational deg_ppsi(const Partition& kappa, int k) {
  const int m = kappa.length();
  if (k < 0) throw DomainError("deg_ppsi with negative psi power");
  if (m < 2 || k > m - 2) return Rational(0);
  return Rational(binomial(m - 2, k)) * ipow(Integer(kappa.size()), m - 2 - k) * prod_weight(kappa);
}

Rational delta00_closed(const Partition& kappa) {
  const long n = kappa.size();
  const long m = kappa.length();
  const Rational bracket =
      Rational(n) * kappa.reciprocal_sum() - Rational(Integer((m - 2) * (m - 3)), Integer(2));
  return bracket * ipow(Integer(n), m - 4) * prod_weight(kappa);
}

Rational delta00_split_sum(const Partition& kappa) {
  if (kappa.length() < 2) throw DomainError("delta00 split sum needs at least two poles");
  const auto side = [](const Partition& p) {
    return ipow(Integer(p.size()), p.length() - 2) / Rational(aut_order(p));
  };
  Rational sum;
  for (const auto& split : ordered_splits(kappa, /*proper=*/true)) {
    sum += side(split.right) * side(split.left);
  }
  return Rational(Integer(1), Integer(2)) * sum * Rational(aut_order(kappa)) * prod_weight(kappa);
}

}  // namespace hurwitz
