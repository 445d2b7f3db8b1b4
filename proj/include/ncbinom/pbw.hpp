#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncbinom/freepoly.hpp"

namespace ncb {

// Product E_{a1}^{t1} ... E_{an}^{tn} with a1 > ... > an Lyndon.
//
// Stored flattened as the non-increasing sequence of Lyndon factors (each
// factor repeated t times); runs() recovers the (word, exponent) form.
// Comparison is lexicographic on that sequence, which orders a polynomial's
// terms the same way the printed tables do when iterated in decreasing order.
class PBWMonomial {
public:
  PBWMonomial() = default; // the unit

  // Factors must be Lyndon and non-increasing; throws OrderViolation otherwise.
  static PBWMonomial from_factors(std::vector<Word> factors);
  static PBWMonomial from_factors(const std::vector<LyndonWord> &factors);
  // Runs must be strictly decreasing with positive exponents.
  static PBWMonomial from_runs(const std::vector<std::pair<Word, int>> &runs);
  static PBWMonomial single(const LyndonWord &w) { return from_factors({w.word()}); }

  const std::vector<Word> &factors() const { return factors_; }
  std::vector<std::pair<Word, int>> runs() const;
  bool is_unit() const { return factors_.empty(); }
  std::size_t degree() const;
  int multidegree(Letter x) const;
  Letter max_letter() const;
  // alpha_1^{t_1} ... alpha_n^{t_n} as one word
  Word concatenation() const;

  bool operator==(const PBWMonomial &) const = default;
  std::strong_ordering operator<=>(const PBWMonomial &) const = default;

private:
  std::vector<Word> factors_;
};

// Linear combination of PBW monomials; iteration runs from the largest
// monomial down.
template <Coefficient R> class PBWPoly {
public:
  using Terms = std::map<PBWMonomial, R, std::greater<>>;

  explicit PBWPoly(Alphabet alphabet = Alphabet(2)) : alphabet_(alphabet) {}

  const Alphabet &alphabet() const { return alphabet_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const R *find(const PBWMonomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const PBWMonomial &m, const R &c) {
    if (m.max_letter() > alphabet_.size)
      throw AlphabetMismatch("PBW monomial outside alphabet");
    if (CoeffTraits<R>::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = R(it->second + c);
      if (CoeffTraits<R>::is_zero(it->second))
        terms_.erase(it);
    }
  }

  PBWPoly &operator+=(const PBWPoly &o) {
    check(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  PBWPoly &operator-=(const PBWPoly &o) {
    check(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, R(-c));
    return *this;
  }
  PBWPoly operator+(const PBWPoly &o) const { return PBWPoly(*this) += o; }
  PBWPoly operator-(const PBWPoly &o) const { return PBWPoly(*this) -= o; }
  PBWPoly scale(const R &s) const {
    PBWPoly r(alphabet_);
    for (const auto &[m, c] : terms_)
      r.add_term(m, R(c * s));
    return r;
  }

  bool operator==(const PBWPoly &o) const {
    return alphabet_ == o.alphabet_ && terms_ == o.terms_;
  }

  template <class Pred> PBWPoly filter(Pred pred) const {
    PBWPoly r(alphabet_);
    for (const auto &[m, c] : terms_)
      if (pred(m))
        r.terms_.emplace(m, c);
    return r;
  }

  template <class F> auto map_coefficients(F f) const {
    using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
    PBWPoly<S> r(alphabet_);
    for (const auto &[m, c] : terms_)
      r.add_term(m, f(c));
    return r;
  }

private:
  void check(const PBWPoly &o) const {
    if (!(alphabet_ == o.alphabet_))
      throw AlphabetMismatch("PBW polynomials over different alphabets");
  }

  Alphabet alphabet_;
  Terms terms_;
};

using PBWPolyQ = PBWPoly<Rational>;

// E_alpha: the letter itself, or [E_beta, E_gamma] for st(alpha) = (beta, gamma). Memoized.
const FreePolyQ &ls_basis_element(const LyndonWord &alpha, const Alphabet &alphabet);

// Product of the basis elements in stored order. Memoized.
const FreePolyQ &pbw_expand(const PBWMonomial &m, const Alphabet &alphabet);
FreePolyQ pbw_expand(const PBWPolyQ &p);

// PBW coordinates of f by lex-minimal-word elimination. Falls back to
// pbw_rewrite_linear if a leading word ever fails the triangularity check.
PBWPolyQ pbw_rewrite(const FreePolyQ &f);

// Same result through an exact linear solve per homogeneous component,
// expressing each component in the full PBW basis of its multidegree.
PBWPolyQ pbw_rewrite_linear(const FreePolyQ &f);

// True iff the lex-minimal word of pbw_expand(m) is m.concatenation() with
// coefficient 1.
bool triangular_leading_word(const PBWMonomial &m, const Alphabet &alphabet);

// Every PBW monomial whose concatenation has the given letter counts
// (counts[x-1] = occurrences of x). In bijection with words via CFL.
std::vector<PBWMonomial> pbw_monomials_of_multidegree(const std::vector<int> &counts);

struct CommutatorResult {
  PBWPolyQ value;
  bool single_bracket = false; // the [E_a, E_b] = E_{ab} case
};

// PBW form of [E_alpha, E_beta] for alpha < beta, with the structural
// postconditions on the Lyndon words appearing checked (TheoremViolation).
CommutatorResult commutator_ls(const LyndonWord &alpha, const LyndonWord &beta,
                               const Alphabet &alphabet);

// For alpha_R < beta: every gamma in [E_alpha, E_beta] has alpha_R <= gamma_R < beta.
// Desk-scale conjecture check; reports rather than throws.
bool refined_commutator_claim(const LyndonWord &alpha, const LyndonWord &beta,
                              const Alphabet &alphabet);

PBWPoly<PrimeFieldElem> reduce_mod_p(const PBWPolyQ &p, std::int64_t prime);

template <Coefficient R> std::string to_text(const PBWMonomial &m) {
  if (m.is_unit())
    return "1";
  std::string s;
  for (const auto &[w, t] : m.runs()) {
    if (!s.empty())
      s += "*";
    s += "E(" + to_string(w) + ")";
    if (t > 1)
      s += "^" + std::to_string(t);
  }
  return s;
}

std::string to_latex(const PBWMonomial &m);

template <Coefficient R> std::string to_text(const PBWPoly<R> &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    std::string cs = CoeffTraits<R>::text(c);
    if (!CoeffTraits<R>::is_atomic(c))
      cs = "(" + cs + ")";
    if (!first)
      out += " + ";
    first = false;
    out += cs + "*" + to_text<R>(m);
  }
  return out;
}

// E-notation: 6E_{2}^{2}E_{1}^{2}+12E_{2}E_{12}E_{1}+...
template <Coefficient R> std::string to_latex(const PBWPoly<R> &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    std::string cs = CoeffTraits<R>::latex(c);
    const bool atomic = CoeffTraits<R>::is_atomic(c);
    const bool neg = atomic && !cs.empty() && cs[0] == '-';
    if (!atomic)
      cs = "(" + cs + ")";
    if (!first && !neg)
      out += "+";
    first = false;
    if (!m.is_unit()) {
      if (CoeffTraits<R>::is_one(c))
        cs.clear();
      else if (CoeffTraits<R>::is_minus_one(c))
        cs = "-";
    }
    out += cs + (m.is_unit() ? std::string() : to_latex(m));
  }
  return out;
}

} // namespace ncb
