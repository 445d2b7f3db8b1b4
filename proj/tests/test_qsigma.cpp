#include "doctest.h"

#include "ncbinom/bell.hpp"
#include "ncbinom/qsigma.hpp"

using namespace ncb;

namespace {

const Alphabet AB(2);
const QPoly q = QPoly::q_power(1);

FreePolyQq mono(const char *w, const QPoly &c = QPoly(1)) {
  return FreePolyQq::monomial(AB, parse_word(w, AB), c);
}

Operator sigma_q() { return Operator::grading(); }

// y -> q y, x -> x: an endomorphism that is not a grading
Operator sigma_mixed() { return Operator::endomorphism({mono("1"), mono("2", q)}); }

} // namespace

TEST_CASE("operator application") {
  const FreePolyQq x = qx(), y = qy(), one = FreePolyQq::unit(AB);
  const Operator id = Operator::identity();
  CHECK(Operator::ad_sigma(x, id).apply(y) == mono("12") - mono("21"));
  CHECK(sigma_q().apply(mono("121")) == mono("121", q * q * q));
  CHECK((Operator::ad_sigma(x, sigma_q()) + Operator::left_mult(y)).apply(one) == y);
  CHECK(Operator::scaled(QPoly(3), id).apply(y) == y.scale(QPoly(3)));
  CHECK((sigma_q() * sigma_q()).apply(mono("12")) == sigma_q().power(2).apply(mono("12")));
  CHECK(sigma_q().power(0).apply(mono("12")) == mono("12"));
  // swapping the letters is an endomorphism
  Operator swap = Operator::endomorphism({y, x});
  CHECK(swap.apply(mono("112")) == mono("221"));
  CHECK(swap.apply(one) == one);
  Operator bad = Operator::endomorphism({x, y}, QPoly(2));
  CHECK_THROWS_AS(bad.apply(one), NotUnital);
  CHECK_THROWS_AS(check_endomorphism(bad, AB), NotUnital);
  CHECK_THROWS_AS(Operator::endomorphism({x}).apply(y), AlphabetMismatch);
  CHECK_FALSE(Operator::left_mult(x).describe().empty());
}

TEST_CASE("endomorphisms and sigma-derivations") {
  for (const Operator &s : {Operator::identity(), sigma_q(), sigma_mixed(),
                            Operator::endomorphism({qy(), qx()})}) {
    CHECK_NOTHROW(check_endomorphism(s, AB));
    CHECK_NOTHROW(check_sigma_derivation(Operator::ad_sigma(qx(), s), s, AB));
    CHECK_NOTHROW(check_sigma_derivation(Operator::ad_sigma(qy() + mono("12"), s), s, AB));
  }
  // a sigma-derivation given by generator images
  Operator d = Operator::sigma_derivation(sigma_q(), {FreePolyQq(AB), mono("22")});
  CHECK_NOTHROW(check_sigma_derivation(d, sigma_q(), AB));
  CHECK(d.apply(mono("2")) == mono("22"));
  CHECK(d.apply(mono("22")) == mono("222") + mono("222", q));
  // it is not an ordinary derivation
  CHECK_THROWS_AS(check_sigma_derivation(d, Operator::identity(), AB), NotASigmaDerivation);
  // left multiplication is no derivation at all
  CHECK_THROWS_AS(check_sigma_derivation(Operator::left_mult(qx()), sigma_q(), AB),
                  NotASigmaDerivation);
  // a sum of endomorphisms is not multiplicative
  CHECK_THROWS_AS(check_endomorphism(Operator::identity() + sigma_q(), AB), Error);
}

TEST_CASE("operator-valued shuffle polynomials") {
  const FreePolyQq x = qx(), y = qy(), one = FreePolyQq::unit(AB);
  for (const Operator &s : {Operator::identity(), sigma_q(), sigma_mixed()}) {
    CHECK(sh_hat_apply(1, 0, x, y, s) == y);
    CHECK(sh_hat_apply(1, 1, x, y, s) == y + s.apply(y));
    for (int n = 0; n <= 5; ++n)
      CHECK(sh_hat_apply(0, n, x, y, s) == one);
    Operator D0 = Operator::ad_sigma(x, s) + Operator::left_mult(y);
    CHECK(sh_hat_apply(3, 0, x, y, s) == D0.power(3).apply(one));
  }
  // degree 2 expansion: ad_sigma x(y) + y^2
  CHECK(sh_hat_apply(2, 0, x, y, sigma_q()) == mono("12") - mono("21", q) + mono("22"));
  CHECK_THROWS(sh_hat_apply(-1, 0, x, y, sigma_q()));
}

TEST_CASE("noncommutative binomial formula with a sigma-derivation") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(theorem_b_verify(n, Operator::identity()));
    CHECK(theorem_b_verify(n, sigma_q()));
    CHECK(theorem_b_identity_case(n));
  }
  for (int n = 0; n <= 5; ++n)
    CHECK(theorem_b_verify(n, sigma_mixed()));
}

TEST_CASE("factorization through D_m") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(nondecreasing_tuples(k, n - k).size() == binomial(n, k));
      CHECK(d_m_factorization_check(n, k, sigma_q()));
      CHECK(d_m_factorization_check(n, k, Operator::identity()));
    }
  CHECK(d_m_factorization_check(4, 2, sigma_mixed()));
  CHECK(d_m_factorization_check(3, 3, sigma_mixed()));
  CHECK_THROWS(d_m_factorization_check(2, 0, sigma_q()));
  for (int m = 0; m <= 3; ++m) {
    CHECK(sigma_adjoint_check(m, sigma_q()));
    CHECK(sigma_adjoint_check(m, sigma_mixed()));
  }
}

TEST_CASE("q-Bell differential polynomials") {
  const FreePolyQq y = qy();
  const FreePolyQq &y1 = q_derivative(1), &y2 = q_derivative(2);
  CHECK(y1 == mono("12") - mono("21", q));
  CHECK(q_derivative(0) == y);
  CHECK(qbell(0) == FreePolyQq::unit(AB));
  CHECK(qbell(1) == y);
  CHECK(qbell(2) == y1 + y * y);
  CHECK(qbell(2) == mono("12") - mono("21", q) + mono("22"));
  CHECK(qbell(3) == y2 + (y * y1).scale(q_integer(2)) + y1 * y + y * y * y);
  for (int n = 0; n <= 6; ++n) {
    CHECK(evaluate_q(qbell(n), 1) == bell_word(n));
    for (int k = 0; k <= n; ++k)
      CHECK(evaluate_q(qbell_partial(n, k), 1) == bell_partial_word(n, k));
  }
}

TEST_CASE("partial q-Bell sum recursion") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(qbell_partial_sum_form(n, k) == qbell_partial(n, k));
  // the variant with y^{(n-l)} already fails at n = k = 1
  CHECK_FALSE(qbell_partial_sum_form(1, 1, true) == qbell_partial(1, 1));
  CHECK(qbell_partial_sum_form(0, 0) == FreePolyQq::unit(AB));
  CHECK(qbell_partial_sum_form(3, 0).is_zero());
}

TEST_CASE("q-binomial formula") {
  const FreePolyQq x = qx(), y = qy();
  FreePolyQq lhs = power(x + y, 2);
  CHECK(lhs == x * x + (y * x).scale(q_integer(2)) + q_derivative(1) + y * y);
  FreePolyQq cube = x * x * x + (y * x * x).scale(q_integer(3)) +
                    (q_derivative(1) * x).scale(q_integer(3)) + (y * y * x).scale(q_integer(3)) +
                    qbell(3);
  CHECK(cube == power(x + y, 3));
  for (int n = 0; n <= 6; ++n)
    CHECK(binomial_q_verify(n));
}

TEST_CASE("Ore extension coefficients") {
  // delta = ad_sigma x reproduces the sigma-binomial coefficients
  for (const Operator &s : {Operator::identity(), sigma_q()}) {
    auto c = ore_binomial(4, s, Operator::ad_sigma(qx(), s));
    REQUIRE(c.size() == 5);
    for (int k = 0; k <= 4; ++k)
      CHECK(c[k] == sh_hat_apply(k, 4 - k, qx(), qy(), s));
  }
  auto one = ore_binomial(1, Operator::identity(), Operator::ad_sigma(qx(), Operator::identity()));
  CHECK(one[0] == FreePolyQq::unit(AB));
  CHECK(one[1] == qy());
  // sigma = id: binom(n,k) times the Bell polynomial, and the full binomial sum
  for (int n = 0; n <= 5; ++n) {
    auto c = ore_binomial(n, Operator::identity(), Operator::ad_sigma(qx(), Operator::identity()));
    FreePolyQq sum(AB);
    for (int k = 0; k <= n; ++k) {
      CHECK(c[k] == to_qpoly(bell_word(k)).scale(QPoly(Rational(binomial(n, k)))));
      sum += c[k] * power(qx(), static_cast<unsigned>(n - k));
    }
    CHECK(sum == power(qx() + qy(), static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(ore_binomial(3, Operator::identity(), Operator::left_mult(qy())),
                  NotASigmaDerivation);
  CHECK_THROWS_AS(ore_binomial(3, Operator::endomorphism({qx(), qy()}, QPoly(0)),
                               Operator::identity()),
                  NotUnital);
  for (int n = 0; n <= 7; ++n)
    CHECK(ore_commutative_check(n));
}
