#include "doctest.h"

#include "ncbinom/bell.hpp"

using namespace ncb;

namespace {

const Alphabet AB(2);

} // namespace

TEST_CASE("partial Bell polynomials") {
  CHECK(to_latex(bell_partial(3, 2).pbw) == "3E_{2}E_{12}+E_{122}");
  CHECK(to_latex(bell_partial(4, 3).pbw) == "6E_{2}^{2}E_{12}+4E_{2}E_{122}+E_{1222}");
  CHECK(to_latex(bell_partial(4, 2).pbw) == "4E_{2}E_{112}+3E_{12}^{2}+E_{1122}");
  CHECK(to_latex(bell_partial(4, 1).pbw) == "E_{1112}");
  CHECK(to_latex(bell_partial(2, 1).pbw) == "E_{12}");
  CHECK(bell_partial(5, 0).word.is_zero());
  CHECK(bell_partial(2, 3).word.is_zero());
  CHECK(bell_partial(0, 0).word == FreePolyQ::unit(AB));
  CHECK_THROWS(bell_partial(-1, 0));
  // homogeneity by letter count
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto &[w, c] : bell_partial_word(n, k).terms()) {
        CHECK(w.count(2) == k);
        CHECK(w.count(1) == n - k);
      }
  // B_n = (ad x + y)^n (1)
  FreePolyQ x = FreePolyQ::letter(AB, 1), y = FreePolyQ::letter(AB, 2);
  FreePolyQ b = FreePolyQ::unit(AB);
  for (int n = 0; n <= 6; ++n) {
    CHECK(bell_word(n) == b);
    b = commutator(x, b) + y * b;
  }
}

TEST_CASE("dual Bell polynomials") {
  CHECK(to_latex(bell_dual(1, 1)) == "E_{1}");
  CHECK(to_latex(bell_dual(2, 1)) == "E_{12}");
  for (int n = 1; n <= 5; ++n)
    CHECK(bell_dual(n, 0).is_zero());
}

TEST_CASE("shuffle filters match Bell polynomials") {
  CHECK(sh_filter(MultiDegree::binary(2, 1), FilterSide::RightmostNotE1) == bell_partial(3, 2).pbw);
  CHECK(sh_filter(MultiDegree::binary(2, 2), FilterSide::RightmostNotE1) == bell_partial(4, 2).pbw);
  for (int j = 1; j <= 4; ++j)
    CHECK(sh_filter(MultiDegree::binary(0, j), FilterSide::RightmostNotE1).is_zero());
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(bell_partial(n, k).pbw == sh_filter(MultiDegree::binary(k, n - k), FilterSide::RightmostNotE1));
      CHECK(bell_dual(n, k) == sh_filter(MultiDegree::binary(n - k, k), FilterSide::LeftmostNotE2));
    }
  CHECK_THROWS_AS(sh_filter(MultiDegree({1, 1, 1}), FilterSide::RightmostNotE1), AlphabetMismatch);
}

TEST_CASE("binomial theorem through Bell polynomials") {
  FreePolyQ s = FreePolyQ::letter(AB, 1) + FreePolyQ::letter(AB, 2);
  CHECK(binomial_via_bell(0) == FreePolyQ::unit(AB));
  for (int n = 0; n <= 7; ++n) {
    CHECK(binomial_via_bell(n) == power(s, unsigned(n)));
    CHECK(binomial_via_bell_dual(n) == power(s, unsigned(n)));
  }
}

TEST_CASE("Lyndon-Shirshov closed forms of Bell polynomials") {
  CHECK(to_latex(bell_ls_form(3, 2)) == "3E_{2}E_{12}+E_{122}");
  CHECK(to_latex(bell_ls_form(4, 4)) == "E_{2}^{4}");
  CHECK(to_latex(bell_ls_form(4, 1)) == "E_{1112}");
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK_NOTHROW(bell_ls_form(n, k));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK_NOTHROW(bell_ls_form_multi(3, n, k));
}

TEST_CASE("classical Bell projection") {
  CHECK(to_latex(classical_bell_project(3)) == "E_{2}^{3}+3E_{2}E_{12}+E_{112}");
  CHECK(to_latex(classical_bell_project(2)) == "E_{2}^{2}+E_{12}");
  CHECK(to_latex(classical_bell_project(1)) == "E_{2}");
  for (int n = 0; n <= 6; ++n)
    CHECK_NOTHROW(classical_bell_project(n));
  // coefficients of the classical formula sum to the Bell numbers
  const long bell_numbers[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    Rational s = 0;
    const PBWPolyQ f = classical_bell_formula(n);
    for (const auto &[m, c] : f.terms())
      s += c;
    CHECK(s == bell_numbers[n]);
  }
}
