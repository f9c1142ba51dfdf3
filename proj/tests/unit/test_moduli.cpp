#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/moduli.hpp"
#include "support/brute_force.hpp"
#include "support/property.hpp"

using namespace hurwitz;

namespace {

// All exponent vectors of length m summing to m - 3.
void for_each_exponent_vector(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> l(static_cast<std::size_t>(m), 0);
  const auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      l[static_cast<std::size_t>(i)] = left;
      fn(l);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      l[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, m - 3);
}

Rational pzeta_reference(const Partition& kappa) {
  Rational out = ipow(Integer(kappa.size()), kappa.length() - 2);
  for (int k : kappa.parts()) out *= ipow(Integer(k), k) / Rational(hurwitz::testing::factorial_by_multiplication(k));
  return out;
}

}  // namespace

TEST_CASE("psi_integral examples") {
  const std::vector<int> a{0, 0, 0}, b{1, 1, 0, 0, 0}, c{2, 0, 0, 0, 0};
  CHECK(psi_integral(a) == Integer(1));
  CHECK(psi_integral(b) == Integer(2));
  CHECK(psi_integral(c) == Integer(1));
}

TEST_CASE("psi_integral errors") {
  const std::vector<int> short_vec{0, 0}, mismatch{1, 0, 0}, negative{2, -1, 0, 0};
  CHECK_THROWS_AS((void)psi_integral(short_vec), DomainError);
  CHECK_THROWS_AS((void)psi_integral(mismatch), DomainError);
  CHECK_THROWS_AS((void)psi_integral(negative), DomainError);
  CHECK(psi_integral_or_zero(mismatch) == Integer(0));
  CHECK_THROWS_AS((void)psi_integral_or_zero(short_vec), DomainError);
}

TEST_CASE("psi integrals agree with the string equation") {
  for (int m = 3; m <= 9; ++m) {
    Integer total(0);
    for_each_exponent_vector(m, [&](const std::vector<int>& l) {
      CHECK(psi_integral(l) == hurwitz::testing::psi_by_string_equation(l));
      total += psi_integral(l);
    });
    CHECK(total == ipow(Integer(m), m - 3).to_integer());
  }
}

TEST_CASE("psi_integral is symmetric") {
  std::mt19937_64 rng(hurwitz::testing::kPropertySeed);
  for (int m = 3; m <= 9; ++m) {
    for_each_exponent_vector(m, [&](const std::vector<int>& l) {
      CHECK(psi_integral(hurwitz::testing::shuffled(l, rng)) == psi_integral(l));
    });
  }
}

TEST_CASE("segre_degree examples") {
  CHECK(segre_degree(Partition{2, 1}, 0) == Rational(2));
  CHECK(segre_degree(Partition{1, 1, 1}, 0) == Rational(3));
  CHECK(segre_degree(Partition{1, 1, 1}, 2) == Rational(0));
  CHECK_THROWS_AS((void)segre_degree(Partition{3}, 0), DomainError);
}

TEST_CASE("closed pushforward degrees") {
  CHECK(deg_pzeta(Partition{3, 1}) == Rational(Integer(9), Integer(2)));
  CHECK(deg_pzeta(Partition{1, 1, 1}) == Rational(3));
  CHECK(deg_pzeta(Partition{2}) == Rational(1));
  CHECK(deg_ppsi(Partition{1, 1, 1, 1}, 1) == Rational(8));
  CHECK(deg_ppsi(Partition{1, 1, 1}, 2) == Rational(0));
  CHECK(deg_ppsi(Partition{3, 1}, 0) == Rational(Integer(9), Integer(2)));
}

TEST_CASE("segre degree matches the closed forms") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      const int m = kappa.length();
      CHECK(segre_degree(kappa, 0) == deg_pzeta(kappa));
      CHECK(deg_pzeta(kappa) == pzeta_reference(kappa));
      for (int k = 0; k <= m - 2; ++k) {
        const Rational expected = Rational(binomial(m - 2, k)) * ipow(Integer(n), -k) * pzeta_reference(kappa);
        CHECK(segre_degree(kappa, k) == deg_ppsi(kappa, k));
        CHECK(deg_ppsi(kappa, k) == expected);
      }
    }
  }
}

TEST_CASE("delta00 examples") {
  CHECK(delta00_closed(Partition{1, 1}) == Rational(1));
  CHECK(delta00_closed(Partition{2, 1}) == Rational(1));
  CHECK(delta00_closed(Partition{1, 1, 1}) == Rational(3));
  CHECK(delta00_split_sum(Partition{1, 1}) == Rational(1));
  CHECK(delta00_split_sum(Partition{2, 2}) == Rational(1));
  CHECK(delta00_split_sum(Partition{1, 1, 1}) == Rational(3));
  CHECK_THROWS_AS((void)delta00_split_sum(Partition{4}), DomainError);
  // the closed form still evaluates for a single pole
  CHECK_NOTHROW((void)delta00_closed(Partition{4}));
}

TEST_CASE("delta00 split sum equals closed form") {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      CHECK(delta00_split_sum(kappa) == delta00_closed(kappa));
    }
  }
}
