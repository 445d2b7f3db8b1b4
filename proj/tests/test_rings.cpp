#include "doctest.h"

#include <random>

#include "ncbinom/rings.hpp"

using namespace ncb;

namespace {

QPoly poly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs)
    v.emplace_back(c);
  return QPoly(v);
}

QPoly random_qpoly(std::mt19937 &rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5), den(1, 4);
  std::vector<Rational> v;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i)
    v.emplace_back(coef(rng), den(rng));
  for (auto &c : v)
    c.canonicalize();
  return QPoly(v);
}

} // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("prime field") {
  PrimeFieldElem two(2, 3);
  CHECK((two * two).residue() == 1);
  CHECK((two + two).residue() == 1);
  CHECK((-two).residue() == 1);
  CHECK((two * two.inverse()).residue() == 1);
  CHECK_THROWS_AS(PrimeFieldElem(1, 4), Error);
  CHECK_THROWS_AS(PrimeFieldElem(1, 2) + PrimeFieldElem(1, 3), RingMismatch);
  CHECK(PrimeFieldElem::reduce(Rational(1, 2), 5).residue() == 3);
  CHECK(PrimeFieldElem(-7, 5).residue() == 3);
  CHECK_THROWS(PrimeFieldElem(0, 7).inverse());
}

TEST_CASE("prime field axioms on random triples") {
  std::mt19937 rng(7);
  for (std::int64_t p : {2, 3, 5, 7, 101}) {
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int it = 0; it < 200; ++it) {
      PrimeFieldElem a(d(rng), p), b(d(rng), p), c(d(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == PrimeFieldElem(0, p));
      if (!a.is_zero())
        CHECK(a * a.inverse() == PrimeFieldElem(1, p));
    }
  }
}

TEST_CASE("rational axioms on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> n(-50, 50), d(1, 30);
  for (int it = 0; it < 300; ++it) {
    Rational a(n(rng), d(rng)), b(n(rng), d(rng)), c(n(rng), d(rng));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (a != 0)
      CHECK(a * (1 / a) == 1);
    CHECK(a.get_den() > 0);
  }
}

TEST_CASE("qpoly arithmetic and text") {
  QPoly one_q = poly({1, 1});
  CHECK(one_q * one_q == poly({1, 2, 1}));
  CHECK((one_q - one_q).is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(poly({1, 1, 0, 0}).degree() == 1);
  QPoly p(std::vector<Rational>{1, 1, 0, Rational(-1, 2)});
  CHECK(p.to_text() == "1 + q - 1/2*q^3");
  CHECK(parse_qpoly(p.to_text()) == p);
  CHECK(parse_qpoly("q^2 + 3") == poly({3, 0, 1}));
  CHECK(parse_qpoly("0").is_zero());
  CHECK(poly({0, 1}).substitute_power(2) == poly({0, 0, 1}));
  CHECK(poly({1, 2, 1}).evaluate(1) == 4);
}

TEST_CASE("q-integers, factorials and binomials") {
  CHECK(q_integer(3) == poly({1, 1, 1}));
  CHECK(q_integer(0).is_zero());
  CHECK(q_factorial(0) == QPoly(1));
  CHECK(q_binomial(5, 0) == QPoly(1));
  CHECK(q_binomial(3, 1) == poly({1, 1, 1}));
  CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(q_binomial(2, 3).is_zero());
  // division oracle
  CHECK(q_binomial(4, 2) == qpoly_exact_div(q_factorial(4), q_factorial(2) * q_factorial(2)));
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k).evaluate(1) == Rational(binomial(n, k)));
      CHECK(q_binomial(n, k) ==
            qpoly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k)));
    }
}

TEST_CASE("exact division") {
  CHECK(qpoly_exact_div(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(qpoly_exact_div(poly({1, 0, 1}), poly({1, 1})), DivisionNotExact);
  CHECK_THROWS(qpoly_exact_div(poly({1}), QPoly()));
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    QPoly a = random_qpoly(rng, 5), b = random_qpoly(rng, 4);
    if (b.is_zero())
      continue;
    CHECK(qpoly_exact_div(a * b, b) == a);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  // product over divisors recovers q^n - 1
  for (unsigned n = 1; n <= 12; ++n) {
    QPoly prod(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0)
        prod *= cyclotomic(d);
    CHECK(prod == QPoly::q_power(n) - QPoly(1));
  }
}
