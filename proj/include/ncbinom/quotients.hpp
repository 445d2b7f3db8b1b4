#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncbinom/pbw.hpp"

namespace ncb {

// Lyndon generators declared zero. A bracket E_w also vanishes when any node
// of its standard-factorization tree is declared zero.
class KillSet {
public:
  KillSet() = default;
  explicit KillSet(std::vector<Word> generators);
  // "112,122"
  static KillSet parse(const std::string &text);

  bool kills(const Word &lyndon) const;
  const std::set<Word> &generators() const { return gens_; }

private:
  std::set<Word> gens_;
};

template <Coefficient R> PBWPoly<R> kill_project(const PBWPoly<R> &p, const KillSet &ks) {
  return p.filter([&](const PBWMonomial &m) {
    for (const auto &[w, t] : m.runs())
      if (ks.kills(w))
        return false;
    return true;
  });
}

// Exponents (r, s, t) of y^r h^s x^t.
using YHX = std::array<int, 3>;

// Normal order of a word in x, y, h ('x', 'y', 'h') under
// xy -> q yx + h, xh -> q^2 hx, hy -> q^2 yh, by literal rewriting. Each step
// is checked to lower the (x..y, x..h, h..y) inversion counts lexicographically.
std::map<YHX, QPoly> blumen_normal_order(const std::string &word);
std::map<YHX, Rational> weyl_normal_order(const std::string &word);

// (E_1 + E_2)^d modulo E_112 = E_122 = 0, keyed by (t_2, t_12, t_1). The
// rewriting expansion is checked against the projected closed-form expansion,
// d!/(t_2! 2^{t_12} t_12! t_1!) and n!/(j! i! (n-2j-i)!) (h/2)^j with h = E_12.
std::map<YHX, Rational> weyl_binomial(int d);
Rational heisenberg_weyl_coefficient(int n, int j, int i);

// (x+y)^n in the Blumen algebra, checked against
// (n)_q! / ((r)_q! (2)_q^s (s)_{q^2}! (t)_q!).
std::map<YHX, QPoly> blumen_binomial(int n);
QPoly blumen_closed_form(int r, int s, int t);
// q = 1 against weyl_binomial(n) with h = E_12.
bool blumen_weyl_check(int n);
// With h = y^{(1)}: y^{(1)} = xy - q yx reduces to h and y^{(2)} = xh - q^2 hx to 0.
bool blumen_higher_derivatives_vanish();

// Exponents t_1, t_2, ... of d_1^{t_1} d_2^{t_2} ..., no trailing zeros.
using QCommMonomial = std::vector<int>;
using QCommPoly = std::map<QCommMonomial, QPoly>;

// Sorts a word in the symbols d_i (entries i >= 1) with d_v d_u = q^v d_u d_v.
std::pair<QPoly, QCommMonomial> qcomm_normalize(const std::vector<int> &word);
// Same, swapping a caller-chosen adjacent inversion each time; pick(k) returns
// an index in [0, k) among the current inversions.
std::pair<QPoly, QCommMonomial> qcomm_normalize_with(const std::vector<int> &word,
                                                     const std::function<std::size_t(std::size_t)> &pick);

// B_{n,k,q} as a polynomial in the free symbols d_i (alphabet size n + 1) from
// B_{n,k,q} = sum_l binom(n-1,l)_q B_{l,k-1,q} d_{n-l}.
const FreePolyQq &qbell_partial_d_words(int n, int k);
// Substitutes d_i -> y^{(i-1)} in the x, y algebra.
FreePolyQq substitute_derivatives(const FreePolyQq &d_poly);

// Route A normal-orders the d-words, route B evaluates the q-multinomial closed
// form; the two are compared and route A returned.
QCommPoly qcomm_bell(int n, int k);
QCommPoly qcomm_bell_closed_form(int n, int k);
QCommPoly qcomm_bell_total(int n);

// (x+y)^n under the q-commutation model, keyed by (monomial in d, power of x),
// from the closed form; checked against sum_k binom(n,k)_q qcomm_bell_total(k) x^{n-k}.
std::map<std::pair<QCommMonomial, int>, QPoly> qcomm_binomial(int n);

// Commuting d's: the projected d-word polynomials against the commutative
// partial q-Bell recursion.
QCommPoly commutative_projection(const FreePolyQq &d_poly);
QCommPoly johnson_partial_qbell(int n, int k);

} // namespace ncb
