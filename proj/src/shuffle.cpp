#include "ncbinom/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace ncb {

MultiDegree::MultiDegree(std::vector<int> c) : counts(std::move(c)) {
  if (counts.empty())
    throw Error("multidegree needs at least one letter");
  for (int x : counts)
    if (x < 0)
      throw Error("negative multidegree entry");
}

MultiDegree MultiDegree::parse(const std::string &text) {
  std::vector<int> high_first;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw ParseError("bad multidegree '" + text + "'");
    high_first.push_back(std::stoi(tok));
  }
  if (high_first.empty())
    throw ParseError("empty multidegree");
  std::reverse(high_first.begin(), high_first.end());
  return MultiDegree(std::move(high_first));
}

int MultiDegree::total() const {
  int t = 0;
  for (int c : counts)
    t += c;
  return t;
}

std::string MultiDegree::to_string() const {
  std::string s;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    s += (s.empty() ? "" : ",") + std::to_string(*it);
  return s;
}

PBWPolyQ sh_pbw(const MultiDegree &d) {
  if (d.counts.size() == 2)
    return pbw_rewrite(sh_word_basis(d.counts[1], d.counts[0]));
  return pbw_rewrite(sh_word_multi_recursion(d.counts));
}

PBWPolyQ sh_pbw(int i, int j) { return sh_pbw(MultiDegree::binary(i, j)); }

namespace {

std::mutex c_mutex;
std::map<Word, Integer> c_cache;

Integer power(const Integer &b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

} // namespace

Integer c_e_alpha(const LyndonWord &alpha) {
  if (alpha.size() == 1)
    return 1;
  {
    std::lock_guard lock(c_mutex);
    auto it = c_cache.find(alpha.word());
    if (it != c_cache.end())
      return it->second;
  }
  // alpha = x alpha_1^{a_1} ... alpha_n^{a_n}
  const PBWMonomial rest = PBWMonomial::from_factors(cfl_factorize(alpha.word().substr(1)));
  Integer num = factorial(static_cast<unsigned>(alpha.size() - 1));
  Integer den = 1;
  for (const auto &[w, a] : rest.runs()) {
    den *= power(factorial(static_cast<unsigned>(w.size())), a) * factorial(a);
    num *= power(c_e_alpha(LyndonWord(w)), a);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw TheoremViolation("C_{E_" + to_string(alpha.word()) + "} is not integral: " +
                           num.get_str() + "/" + den.get_str());
  Integer c = num / den;
  std::lock_guard lock(c_mutex);
  c_cache.emplace(alpha.word(), c);
  return c;
}

Rational coeff_closed_form(const PBWMonomial &m) {
  Integer num = factorial(static_cast<unsigned>(m.degree()));
  Integer den = 1;
  for (const auto &[w, t] : m.runs()) {
    den *= power(factorial(static_cast<unsigned>(w.size())), t) * factorial(t);
    num *= power(c_e_alpha(LyndonWord(w)), t);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PBWPolyQ sh_closed_form(const MultiDegree &d) {
  PBWPolyQ r(d.alphabet());
  for (const auto &m : pbw_monomials_of_multidegree(d.counts))
    r.add_term(m, coeff_closed_form(m));
  return r;
}

std::vector<PBWMonomial> pbw_monomials_of_degree(int m, int d) {
  if (d < 0)
    throw Error("negative degree");
  std::vector<PBWMonomial> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<LyndonWord> lyndon = lyndon_enumerate(Alphabet(m), static_cast<std::size_t>(d));
  std::reverse(lyndon.begin(), lyndon.end()); // largest first
  std::vector<Word> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (left == 0) {
      out.push_back(PBWMonomial::from_factors(cur));
      return;
    }
    if (idx == lyndon.size())
      return;
    const Word &w = lyndon[idx].word();
    const int len = static_cast<int>(w.size());
    std::size_t pushed = 0;
    for (int t = 0; t * len <= left; ++t) {
      rec(idx + 1, left - t * len);
      cur.push_back(w);
      ++pushed;
    }
    cur.resize(cur.size() - pushed);
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PBWPolyQ binomial_ls(int m, int d, bool check) {
  if (m < 1)
    throw Error("alphabet size must be positive");
  const Alphabet alphabet(m);
  PBWPolyQ r(alphabet);
  for (const auto &mono : pbw_monomials_of_degree(m, d))
    r.add_term(mono, coeff_closed_form(mono));
  if (check) {
    FreePolyQ sum(alphabet);
    for (int x = 1; x <= m; ++x)
      sum += FreePolyQ::letter(alphabet, static_cast<Letter>(x));
    if (!(pbw_rewrite(power(sum, static_cast<unsigned>(d))) == r))
      throw TheoremViolation("closed-form power of degree " + std::to_string(d) +
                             " disagrees with the rewritten expansion");
  }
  return r;
}

PBWPoly<PrimeFieldElem> sh_pbw_char_p(int k, std::int64_t p) {
  if (!PrimeFieldElem::is_prime(p))
    throw Error(std::to_string(p) + " is not prime");
  if (k < 1 || k > p - 1)
    throw Error("need 1 <= k <= p-1");
  auto r = reduce_mod_p(sh_pbw(k, static_cast<int>(p - k)), p);
  for (const auto &[m, c] : r.terms())
    if (m.factors().size() != 1 || m.factors().front().size() != static_cast<std::size_t>(p))
      throw TheoremViolation("monomial " + to_text<PrimeFieldElem>(m) + " survives mod " +
                             std::to_string(p));
  return r;
}

PBWPoly<PrimeFieldElem> sh_char_p_killed(int k, std::int64_t p, Letter kill_letter) {
  return sh_pbw_char_p(k, p).filter([&](const PBWMonomial &m) {
    return m.factors().front().count(kill_letter) < 2;
  });
}

} // namespace ncb
