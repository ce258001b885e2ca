#include "doctest.h"

#include "kausz/polynomial.hpp"

#include <random>

using namespace kausz;

TEST_CASE("rational strings are canonical") {
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial ring identities") {
  const Polynomial x = Variable::a(1, 2), y = Variable::b(1, 4);
  CHECK((x + y) * (x + y) == x * x + Polynomial(2) * x * y + y * y);
  CHECK((x - x).is_zero());
  CHECK((x * y - y * x).is_zero());
  CHECK(Polynomial::power(Variable::a(1, 2), 3) == x * x * x);
  CHECK((Polynomial(6) * x).divided_exactly(3) == Polynomial(2) * x);
  CHECK_THROWS((Polynomial(5) * x).divided_exactly(3));
  CHECK((x * y).str() == "a_1_2*b_1_4");
  CHECK(Polynomial(0).str() == "0");
  CHECK(Polynomial(-1) * y == -y);
  CHECK(Polynomial(3).is_constant());
  CHECK((x + 4).constant_term() == 4);
  CHECK(Variable::xi(2, 1, 5).str() == "xi_2_1_5");
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  const std::vector<Variable> vars{Variable::a(1, 2), Variable::b(2, 5), Variable::x(1, 3)};
  for (int trial = 0; trial < 50; ++trial) {
    auto random_poly = [&] {
      Polynomial f = coef(rng);
      for (const auto& v : vars) f += Polynomial(coef(rng)) * v * Polynomial(vars[rng() % 3]);
      return f;
    };
    const Polynomial f = random_poly(), g = random_poly();
    std::map<Variable, Rational> at;
    for (const auto& v : vars) at[v] = Rational(coef(rng), 1 + rng() % 3);
    CHECK((f * g).evaluate(at) == f.evaluate(at) * g.evaluate(at));
    CHECK((f + g).evaluate(at) == f.evaluate(at) + g.evaluate(at));
    CHECK((f - f).is_zero());
  }
  CHECK_THROWS_AS(Polynomial(Variable::a(9, 9)).evaluate({}), std::invalid_argument);
}
