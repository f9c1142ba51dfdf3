#include <doctest.h>

#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/sparse_poly.hpp"
#include "support/property.hpp"

using namespace hurwitz;

TEST_CASE("construction and coefficients") {
  const SparsePoly x = SparsePoly::variable(2, 0);
  const SparsePoly y = SparsePoly::variable(2, 1);
  const SparsePoly p = (x + y).pow(3);
  CHECK(p.term_count() == 4);
  CHECK(p.coefficient({2, 1}) == Rational(3));
  CHECK(p.coefficient({0, 3}) == Rational(1));
  CHECK(p.coefficient({1, 1}) == Rational(0));
  CHECK(p.total_degree() == 3);
  CHECK((x - x).is_zero());
  CHECK(SparsePoly::constant(2, Rational(0)).is_zero());
  CHECK(SparsePoly(3).total_degree() == -1);
  CHECK(SparsePoly::constant(3, Rational(2)).total_degree() == 0);
  CHECK(SparsePoly::monomial({1, 2}, Rational(5)).coefficient({1, 2}) == Rational(5));
  const std::vector<std::size_t> idx{0, 1};
  CHECK(SparsePoly::linear_sum(2, idx) == x + y);
}

TEST_CASE("incompatible operands") {
  const SparsePoly a = SparsePoly::variable(2, 0);
  const SparsePoly b = SparsePoly::variable(3, 0);
  CHECK_THROWS_AS((void)(a + b), DomainError);
  CHECK_THROWS_AS((void)SparsePoly::variable(2, 2), DomainError);
  CHECK_THROWS_AS((void)a.pow(-1), DomainError);
}

TEST_CASE("printing") {
  const SparsePoly x = SparsePoly::variable(2, 0);
  const SparsePoly y = SparsePoly::variable(2, 1);
  CHECK_FALSE((x * y + Rational(Integer(1), Integer(2)) * x).str().empty());
  CHECK(SparsePoly(2).str() == "0");
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(hurwitz::testing::kPropertySeed);
  const std::size_t vars = 3;
  std::uniform_int_distribution<int> exp(0, 3);
  const auto random_poly = [&] {
    SparsePoly p(vars);
    for (int t = 0; t < 4; ++t) {
      p += SparsePoly::monomial({exp(rng), exp(rng), exp(rng)}, hurwitz::testing::random_rational(rng, 9));
    }
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const SparsePoly a = random_poly(), b = random_poly();
    const std::vector<Rational> pt{hurwitz::testing::random_rational(rng), hurwitz::testing::random_rational(rng),
                                   hurwitz::testing::random_rational(rng)};
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK(a.pow(3).evaluate(pt) == a.evaluate(pt) * a.evaluate(pt) * a.evaluate(pt));
    CHECK(a * b == b * a);
    const SparsePoly product = a * b;
    for (const auto& [e, c] : product.terms()) CHECK_FALSE(c.is_zero());
  }
}
