#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/strata.hpp"
#include "support/brute_force.hpp"

using namespace hurwitz;

namespace {

Partition caustic_profile(int n) {
  std::vector<int> parts(static_cast<std::size_t>(n - 3), 1);
  parts.push_back(3);
  return Partition(parts);
}

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST_CASE("caustic_degree examples") {
  CHECK(caustic_degree(Partition{3, 1}) == Rational(3));
  CHECK(caustic_degree(Partition{1, 1, 1}) == Rational(3));
  CHECK(caustic_degree(Partition{1, 1, 1, 1}) == Rational(27));
  CHECK_THROWS_AS((void)caustic_degree(Partition{1, 1}), DomainError);
}

TEST_CASE("maxwell_degree examples") {
  CHECK(maxwell_degree(Partition{1, 1, 1, 1}) == Rational(4));
  CHECK(maxwell_degree(Partition{2, 2}) == Rational(-3));
  CHECK(maxwell_degree(Partition{1, 1, 1, 1, 1}) == Rational(65));
  CHECK_THROWS_AS((void)maxwell_degree(Partition{2, 1}), DomainError);
}

TEST_CASE("stratum profiles and dispatch") {
  CHECK(stratum_profile(StratumKind::Caustic, 5) == Partition{3, 1, 1});
  CHECK(stratum_profile(StratumKind::Maxwell, 5) == Partition{2, 2, 1});
  CHECK(parse_stratum_kind("maxwell") == StratumKind::Maxwell);
  CHECK(to_string(StratumKind::Caustic) == "caustic");
  CHECK_THROWS_AS((void)parse_stratum_kind("swallowtail"), ParseError);
  CHECK(stratum_degree(StratumKind::Maxwell, Partition{2, 2}) == Rational(-3));
}

TEST_CASE("kl_codim2") {
  CHECK(kl_codim2(1, 4) == q(3, 2));
  CHECK(kl_codim2(3, 4) == Rational(1));
  CHECK(kl_codim2(2, 5) == Rational(24));
  CHECK_THROWS_AS((void)kl_codim2(4, 6), DomainError);
  CHECK_THROWS_AS((void)kl_codim2(1, 2), DomainError);
}

TEST_CASE("caustic degree restricts to twice the first codimension-two degree") {
  for (int n = 4; n <= 40; ++n) CHECK(caustic_degree(caustic_profile(n)) == Rational(2) * kl_codim2(1, n));
}

TEST_CASE("caustic degree on simple poles matches the factorial closed form") {
  using hurwitz::testing::factorial_by_multiplication;
  for (int n = 3; n <= 20; ++n) {
    const Partition ones = Partition::repeated(1, n);
    const Rational lhs = caustic_degree(ones) * Rational(factorial_by_multiplication(2 * n - 4)) /
                         Rational(factorial_by_multiplication(n));
    const Rational rhs = Rational(factorial_by_multiplication(2 * n - 4)) * ipow(Integer(n), n - 5) * q(9, 2) /
                         Rational(factorial_by_multiplication(n - 3));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("universal_degree examples") {
  CHECK(universal_degree(Partition{3, 1}, caustic_reconciled_preset(), Rational(0)) == Rational(3));
  CHECK(universal_degree(Partition{3, 1}, caustic_printed_preset(), Rational(0)) == Rational(-6));
  const Partition ones{1, 1, 1, 1};
  CHECK(universal_degree(ones, maxwell_printed_preset(), xi0sq_implied(ones)) == Rational(4));
  const auto c = caustic_reconciled_preset();
  CHECK(c.c_zeta == Rational(1));
  CHECK(c.c_psi1 == Rational(3));
  CHECK(c.c_psi2 == Rational(2));
  CHECK(c.c_delta == Rational(-1));
  CHECK(c.c_xi0sq == Rational(0));
  CHECK(maxwell_printed_preset().c_xi0sq == q(1, 2));
}

TEST_CASE("universal expression reproduces both stratum formulas") {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      CHECK(universal_degree(kappa, caustic_reconciled_preset(), Rational(0)) == caustic_degree(kappa));
      if (n >= 4) {
        CHECK(universal_degree(kappa, maxwell_printed_preset(), xi0sq_implied(kappa)) == maxwell_degree(kappa));
      }
    }
  }
}

TEST_CASE("printed caustic preset disagrees somewhere") {
  bool differs = false;
  for (const auto& kappa : enumerate_partitions(6)) {
    if (kappa.length() < 2) continue;
    differs = differs || universal_degree(kappa, caustic_printed_preset(), Rational(0)) != caustic_degree(kappa);
  }
  CHECK(differs);
}

TEST_CASE("specialization report") {
  const auto rep = specialization_report(4, 10);
  CHECK(rep.caustic_all_pass());
  CHECK(rep.checks.size() == 4 * 7);
  const auto find = [&](int n, const std::string& name) {
    for (const auto& c : rep.checks) {
      if (c.n == n && c.name == name) return c;
    }
    FAIL("missing check");
    return SpecializationCheck{};
  };
  const auto c4 = find(4, "caustic");
  CHECK(c4.pass);
  CHECK(c4.lhs == Rational(3));
  CHECK(c4.rhs == Rational(3));
  CHECK(find(10, "caustic").pass);
  const auto m5 = find(5, "maxwell");
  CHECK_FALSE(m5.pass);
  CHECK(m5.lhs == maxwell_degree(Partition{2, 2, 1}));
  CHECK(m5.rhs == Rational(2) * kl_codim2(3, 5));
  CHECK_THROWS_AS((void)specialization_report(3, 6), DomainError);
  CHECK_THROWS_AS((void)specialization_report(8, 6), DomainError);
}
