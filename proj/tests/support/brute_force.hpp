#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Partition and number types.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz::testing {

inline Integer factorial_by_multiplication(int n) {
  Integer out(1);
  for (int i = 2; i <= n; ++i) out *= Integer(i);
  return out;
}

inline Integer pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  std::vector<Integer> row{Integer(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(row.size() + 1, Integer(0));
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Euler's pentagonal recurrence.
inline long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const long sign = k % 2 == 1 ? 1 : -1;
      p[static_cast<std::size_t>(i)] += sign * p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i) p[static_cast<std::size_t>(i)] += sign * p[static_cast<std::size_t>(i - g2)];
    }
  }
  return p[static_cast<std::size_t>(n)];
}

inline Partition parts_of_mask(const Partition& tau, unsigned mask, bool inside) {
  std::vector<int> out;
  for (int i = 0; i < tau.length(); ++i) {
    if (((mask >> i) & 1U) == (inside ? 1U : 0U)) out.push_back(tau[static_cast<std::size_t>(i)]);
  }
  return Partition(out);
}

// Ordered labeled set splits I ⊔ J = {1..m} with tau(I) = mu and tau(J) = lam.
inline long labeled_split_count(const Partition& tau, const Partition& mu, const Partition& lam) {
  long count = 0;
  const unsigned full = (1U << tau.length());
  for (unsigned mask = 0; mask < full; ++mask) {
    if (parts_of_mask(tau, mask, true) == mu && parts_of_mask(tau, mask, false) == lam) ++count;
  }
  return count;
}

// Genus-0 psi integrals from the string and dilaton equations alone.
inline Integer psi_by_string_equation(std::vector<int> l) {
  const int m = static_cast<int>(l.size());
  if (m < 3) return Integer(0);
  if (std::accumulate(l.begin(), l.end(), 0) != m - 3) return Integer(0);
  if (m == 3) return Integer(1);
  const auto zero = std::find(l.begin(), l.end(), 0);
  if (zero == l.end()) return Integer(0);  // unreachable: sum forces a zero exponent
  l.erase(zero);
  Integer total(0);
  for (auto& e : l) {
    if (e == 0) continue;
    --e;
    total += psi_by_string_equation(l);
    ++e;
  }
  return total;
}

using Perm = std::vector<int>;

inline Partition cycle_type(const Perm& p) {
  std::vector<int> seen(p.size(), 0), parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(parts);
}

inline std::vector<Perm> all_permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline bool generates_transitive(const std::vector<Perm>& perms, int n) {
  std::vector<int> reach(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& p : perms) {
      const int w = p[static_cast<std::size_t>(v)];
      if (!reach[static_cast<std::size_t>(w)]) {
        reach[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(reach.begin(), reach.end(), [](int r) { return r == 1; });
}

struct TupleCounts {
  long all = 0;
  long transitive = 0;
};

// Enumerates every tuple in the given classes whose product is the identity.
inline TupleCounts brute_force_tuples(const std::vector<Partition>& classes) {
  const int n = classes.front().size();
  std::map<Partition, std::vector<Perm>> by_type;
  for (auto& p : all_permutations(n)) by_type[cycle_type(p)].push_back(p);
  TupleCounts counts;
  std::vector<Perm> chosen;
  Perm identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  const std::size_t s = classes.size();
  const auto recurse = [&](auto&& self, std::size_t i, const Perm& product) -> void {
    if (i + 1 == s) {
      // the last permutation is forced to be product^{-1}
      Perm last(product.size());
      for (std::size_t k = 0; k < product.size(); ++k) last[static_cast<std::size_t>(product[k])] = static_cast<int>(k);
      if (cycle_type(last) != classes[i]) return;
      ++counts.all;
      chosen.push_back(last);
      if (generates_transitive(chosen, n)) ++counts.transitive;
      chosen.pop_back();
      return;
    }
    for (const auto& p : by_type[classes[i]]) {
      chosen.push_back(p);
      self(self, i + 1, compose(p, product));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, identity);
  return counts;
}

}  // namespace hurwitz::testing
