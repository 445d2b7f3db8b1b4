#include "ncbinom/identities.hpp"

#include <functional>

namespace ncb {

namespace {

const Alphabet AB2(2);

} // namespace

FreePolyQ faa_di_bruno_lhs(int m, int n) {
  if (m < 0 || n < 0)
    throw Error("negative index");
  return FreePolyQ::letter(AB2, 1) * sh_word_basis(m, n);
}

FreePolyQ faa_di_bruno_rhs(int m, int n) {
  if (m < 0 || n < 0)
    throw Error("negative index");
  FreePolyQ r(AB2);
  Word cur;
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == n) {
      // the last index takes what is left
      r.add_term(cur + Word::letter(1) + Word::repeat(2, static_cast<std::size_t>(left)), 1);
      return;
    }
    const Word saved = cur;
    for (int i = 0; i <= left; ++i) {
      cur = saved + Word::letter(1) + Word::repeat(2, static_cast<std::size_t>(i));
      rec(slot + 1, left - i);
    }
    cur = saved;
  };
  rec(0, m);
  return r;
}

bool faa_di_bruno_check(int m, int n) { return faa_di_bruno_lhs(m, n) == faa_di_bruno_rhs(m, n); }

QPlanePoly qplane_normal_order(const FreePolyQ &f) {
  if (f.alphabet().size > 2)
    throw AlphabetMismatch("the quantum plane has two generators");
  QPlanePoly r;
  for (const auto &[w, c] : f.terms()) {
    // h^a g^b h = q^b h^{a+1} g^b
    int a = 0, b = 0;
    unsigned power = 0;
    for (Letter x : w) {
      if (x == 1) {
        ++b;
      } else {
        ++a;
        power += static_cast<unsigned>(b);
      }
    }
    QPoly &slot = r[{a, b}];
    slot += QPoly::q_power(power, c);
    if (slot.is_zero())
      r.erase({a, b});
  }
  return r;
}

bool qplane_binomial_check(int n) {
  if (n < 0)
    throw Error("negative degree");
  const FreePolyQ s = FreePolyQ::letter(AB2, 1) + FreePolyQ::letter(AB2, 2);
  QPlanePoly expect;
  for (int j = 0; j <= n; ++j)
    expect[{n - j, j}] = q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
  return qplane_normal_order(power(s, static_cast<unsigned>(n))) == expect;
}

bool qbinom_cyclotomic_vanish(int n) {
  if (n < 2)
    throw Error("need n >= 2");
  const QPoly phi = cyclotomic(static_cast<unsigned>(n));
  for (int i = 1; i <= n - 1; ++i) {
    const QPoly b = q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
    try {
      b.exact_div(phi);
    } catch (const DivisionNotExact &) {
      return false;
    }
    const QPlanePoly sh = qplane_normal_order(sh_word_basis(i, n - i));
    if (!(sh == QPlanePoly{{{i, n - i}, b}}))
      return false;
  }
  return true;
}

} // namespace ncb
