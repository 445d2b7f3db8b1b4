#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncbinom/coeff.hpp"
#include "ncbinom/words.hpp"

namespace ncb {

// Element of the free associative algebra k<X> in the word basis.
// Terms are kept in a lex-ordered map with no stored zero coefficients.
template <Coefficient R> class FreePoly {
public:
  using Terms = std::map<Word, R>;

  explicit FreePoly(Alphabet alphabet = Alphabet(2)) : alphabet_(alphabet) {}

  static FreePoly monomial(const Alphabet &a, const Word &w, const R &c) {
    FreePoly p(a);
    p.add_term(w, c);
    return p;
  }
  static FreePoly unit(const Alphabet &a, const R &one) { return monomial(a, Word(), one); }
  static FreePoly unit(const Alphabet &a)
    requires requires { CoeffTraits<R>::one(); }
  {
    return monomial(a, Word(), CoeffTraits<R>::one());
  }
  static FreePoly letter(const Alphabet &a, Letter x)
    requires requires { CoeffTraits<R>::one(); }
  {
    return monomial(a, Word::letter(x), CoeffTraits<R>::one());
  }

  const Alphabet &alphabet() const { return alphabet_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of w, or nullptr when absent.
  const R *find(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Word &w, const R &c) {
    for (Letter x : w)
      if (!alphabet_.contains(x))
        throw AlphabetMismatch("letter " + std::to_string(x) + " outside alphabet of size " +
                               std::to_string(alphabet_.size));
    if (CoeffTraits<R>::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = R(it->second + c);
      if (CoeffTraits<R>::is_zero(it->second))
        terms_.erase(it);
    }
  }

  FreePoly &operator+=(const FreePoly &o) {
    check(o);
    for (const auto &[w, c] : o.terms_)
      add_unchecked(w, c);
    return *this;
  }
  FreePoly &operator-=(const FreePoly &o) {
    check(o);
    for (const auto &[w, c] : o.terms_)
      add_unchecked(w, R(-c));
    return *this;
  }
  FreePoly operator+(const FreePoly &o) const { return FreePoly(*this) += o; }
  FreePoly operator-(const FreePoly &o) const { return FreePoly(*this) -= o; }
  FreePoly operator-() const {
    FreePoly r(alphabet_);
    for (const auto &[w, c] : terms_)
      r.terms_.emplace(w, R(-c));
    return r;
  }

  // Concatenation product, extended bilinearly.
  FreePoly operator*(const FreePoly &o) const {
    check(o);
    FreePoly r(alphabet_);
    for (const auto &[u, a] : terms_)
      for (const auto &[v, b] : o.terms_)
        r.add_unchecked(u + v, R(a * b));
    return r;
  }
  FreePoly &operator*=(const FreePoly &o) { return *this = *this * o; }

  FreePoly scale(const R &s) const {
    FreePoly r(alphabet_);
    if (CoeffTraits<R>::is_zero(s))
      return r;
    for (const auto &[w, c] : terms_)
      r.add_unchecked(w, R(c * s));
    return r;
  }

  bool operator==(const FreePoly &o) const {
    return alphabet_ == o.alphabet_ && terms_ == o.terms_;
  }

  // Keeps the terms whose word satisfies pred.
  template <class Pred> FreePoly filter(Pred pred) const {
    FreePoly r(alphabet_);
    for (const auto &[w, c] : terms_)
      if (pred(w))
        r.terms_.emplace(w, c);
    return r;
  }

  template <class F> auto map_coefficients(F f) const {
    using S = std::decay_t<decltype(f(std::declval<const R &>()))>;
    FreePoly<S> r(alphabet_);
    for (const auto &[w, c] : terms_)
      r.add_term(w, f(c));
    return r;
  }

  // Reinterprets over a larger alphabet (letters unchanged).
  FreePoly widen(const Alphabet &a) const {
    if (a.size < alphabet_.size)
      throw AlphabetMismatch("cannot narrow alphabet");
    FreePoly r(a);
    r.terms_ = terms_;
    return r;
  }

private:
  void check(const FreePoly &o) const {
    if (!(alphabet_ == o.alphabet_))
      throw AlphabetMismatch("alphabets of size " + std::to_string(alphabet_.size) + " and " +
                             std::to_string(o.alphabet_.size));
  }
  void add_unchecked(const Word &w, const R &c) {
    if (CoeffTraits<R>::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = R(it->second + c);
      if (CoeffTraits<R>::is_zero(it->second))
        terms_.erase(it);
    }
  }

  Alphabet alphabet_;
  Terms terms_;
};

using FreePolyQ = FreePoly<Rational>;
using FreePolyQq = FreePoly<QPoly>;

template <Coefficient R> FreePoly<R> commutator(const FreePoly<R> &f, const FreePoly<R> &g) {
  return f * g - g * f;
}

template <Coefficient R> FreePoly<R> power(const FreePoly<R> &f, unsigned n, const R &one) {
  FreePoly<R> r = FreePoly<R>::unit(f.alphabet(), one);
  for (unsigned i = 0; i < n; ++i)
    r = r * f;
  return r;
}

template <Coefficient R> FreePoly<R> power(const FreePoly<R> &f, unsigned n) {
  return power(f, n, CoeffTraits<R>::one());
}

// All interleavings of u and v, with multiplicity.
void shuffle_words(const Word &u, const Word &v, std::map<Word, Integer> &out);

template <Coefficient R>
FreePoly<R> shuffle_product(const FreePoly<R> &f, const FreePoly<R> &g) {
  if (!(f.alphabet() == g.alphabet()))
    throw AlphabetMismatch("shuffle of polynomials over different alphabets");
  FreePoly<R> r(f.alphabet());
  for (const auto &[u, a] : f.terms()) {
    for (const auto &[v, b] : g.terms()) {
      std::map<Word, Integer> sh;
      shuffle_words(u, v, sh);
      R ab = a * b;
      for (const auto &[w, mult] : sh) {
        R c = ab;
        for (Integer k = 1; k < mult; ++k)
          c = R(c + ab);
        r.add_term(w, c);
      }
    }
  }
  return r;
}

// (x+y)^n = sum_k SH_{k,n-k}(y, x) with y = letter 2, x = letter 1.
// Built by SH_{i,j} = 2*SH_{i-1,j} + 1*SH_{i,j-1}.
FreePolyQ sh_word_recursion(int i, int j);
// Built as 2^i shuffled with 1^j.
FreePolyQ sh_word_shuffle(int i, int j);
// Both routes; throws TheoremViolation if they ever disagree.
FreePolyQ sh_word_basis(int i, int j);

// Multinomial version: counts[x-1] = occurrences of letter x, alphabet size = counts.size().
FreePolyQ sh_word_multi_recursion(const std::vector<int> &counts);
FreePolyQ sh_word_multi_shuffle(const std::vector<int> &counts);

// Text form "2*E(21) + 1*E(12)", terms in decreasing lex order.
template <Coefficient R> std::string to_text(const FreePoly<R> &f) {
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string c = CoeffTraits<R>::text(it->second);
    if (!CoeffTraits<R>::is_atomic(it->second))
      c = "(" + c + ")";
    if (!first)
      out += " + ";
    first = false;
    out += c + "*E(" + to_string(it->first) + ")";
  }
  return out;
}

template <Coefficient R> std::string to_latex(const FreePoly<R> &f) {
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const R &c = it->second;
    std::string cs = CoeffTraits<R>::latex(c);
    bool neg = !cs.empty() && cs[0] == '-' && CoeffTraits<R>::is_atomic(c);
    if (!CoeffTraits<R>::is_atomic(c))
      cs = "(" + cs + ")";
    if (!first && !neg)
      out += "+";
    first = false;
    std::string word = it->first.empty() ? "1" : to_string(it->first);
    if (it->first.empty())
      out += cs;
    else if (CoeffTraits<R>::is_one(c))
      out += word;
    else if (CoeffTraits<R>::is_minus_one(c))
      out += "-" + word;
    else
      out += cs + "\\," + word;
  }
  return out;
}

} // namespace ncb
