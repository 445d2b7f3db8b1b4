#include "ncbinom/pbw.hpp"

#include <algorithm>
#include <mutex>

namespace ncb {

PBWMonomial PBWMonomial::from_factors(std::vector<Word> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_lyndon(factors[i]))
      throw OrderViolation(to_string(factors[i]) + " is not a Lyndon word");
    if (i > 0 && factors[i - 1] < factors[i])
      throw OrderViolation("PBW factors must be non-increasing: " + to_string(factors[i - 1]) +
                           " before " + to_string(factors[i]));
  }
  PBWMonomial m;
  m.factors_ = std::move(factors);
  return m;
}

PBWMonomial PBWMonomial::from_factors(const std::vector<LyndonWord> &factors) {
  std::vector<Word> words;
  words.reserve(factors.size());
  for (const auto &f : factors)
    words.push_back(f.word());
  return from_factors(std::move(words));
}

PBWMonomial PBWMonomial::from_runs(const std::vector<std::pair<Word, int>> &runs) {
  std::vector<Word> words;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto &[w, t] = runs[i];
    if (t < 1)
      throw OrderViolation("PBW exponent must be positive");
    if (i > 0 && !(w < runs[i - 1].first))
      throw OrderViolation("PBW runs must be strictly decreasing");
    words.insert(words.end(), static_cast<std::size_t>(t), w);
  }
  return from_factors(std::move(words));
}

std::vector<std::pair<Word, int>> PBWMonomial::runs() const {
  std::vector<std::pair<Word, int>> out;
  for (const auto &w : factors_) {
    if (!out.empty() && out.back().first == w)
      ++out.back().second;
    else
      out.emplace_back(w, 1);
  }
  return out;
}

std::size_t PBWMonomial::degree() const {
  std::size_t d = 0;
  for (const auto &w : factors_)
    d += w.size();
  return d;
}

int PBWMonomial::multidegree(Letter x) const {
  int c = 0;
  for (const auto &w : factors_)
    c += w.count(x);
  return c;
}

Letter PBWMonomial::max_letter() const {
  Letter m = 0;
  for (const auto &w : factors_)
    m = std::max(m, w.max_letter());
  return m;
}

Word PBWMonomial::concatenation() const {
  Word r;
  for (const auto &w : factors_)
    r += w;
  return r;
}

std::string to_latex(const PBWMonomial &m) {
  std::string s;
  for (const auto &[w, t] : m.runs()) {
    s += "E_{" + to_string(w) + "}";
    if (t > 1)
      s += "^{" + std::to_string(t) + "}";
  }
  return s;
}

namespace {

// Lookups and inserts are locked; computation happens outside the lock so the
// recursion can re-enter. std::map nodes never move, so returned references
// stay valid for the life of the process.
std::mutex ls_mutex;
std::map<std::pair<int, Word>, FreePolyQ> ls_cache;
std::mutex expand_mutex;
std::map<std::pair<int, PBWMonomial>, FreePolyQ> expand_cache;

} // namespace

const FreePolyQ &ls_basis_element(const LyndonWord &alpha, const Alphabet &alphabet) {
  auto key = std::make_pair(alphabet.size, alpha.word());
  {
    std::lock_guard lock(ls_mutex);
    auto it = ls_cache.find(key);
    if (it != ls_cache.end())
      return it->second;
  }
  FreePolyQ e(alphabet);
  if (alpha.size() == 1) {
    e = FreePolyQ::letter(alphabet, alpha.word()[0]);
  } else {
    auto [beta, gamma] = standard_factorization(alpha);
    e = commutator(ls_basis_element(beta, alphabet), ls_basis_element(gamma, alphabet));
  }
  std::lock_guard lock(ls_mutex);
  return ls_cache.try_emplace(key, std::move(e)).first->second;
}

const FreePolyQ &pbw_expand(const PBWMonomial &m, const Alphabet &alphabet) {
  if (m.max_letter() > alphabet.size)
    throw AlphabetMismatch("PBW monomial outside alphabet");
  auto key = std::make_pair(alphabet.size, m);
  {
    std::lock_guard lock(expand_mutex);
    auto it = expand_cache.find(key);
    if (it != expand_cache.end())
      return it->second;
  }
  FreePolyQ r = FreePolyQ::unit(alphabet);
  if (!m.is_unit()) {
    // peel the last factor so prefixes get cached too
    std::vector<Word> head(m.factors().begin(), m.factors().end() - 1);
    r = pbw_expand(PBWMonomial::from_factors(std::move(head)), alphabet) *
        ls_basis_element(LyndonWord(m.factors().back()), alphabet);
  }
  std::lock_guard lock(expand_mutex);
  return expand_cache.try_emplace(key, std::move(r)).first->second;
}

FreePolyQ pbw_expand(const PBWPolyQ &p) {
  FreePolyQ r(p.alphabet());
  for (const auto &[m, c] : p.terms())
    r += pbw_expand(m, p.alphabet()).scale(c);
  return r;
}

bool triangular_leading_word(const PBWMonomial &m, const Alphabet &alphabet) {
  const FreePolyQ &e = pbw_expand(m, alphabet);
  if (e.is_zero())
    return false;
  const auto &[w, c] = *e.terms().begin();
  return w == m.concatenation() && c == 1;
}

PBWPolyQ pbw_rewrite(const FreePolyQ &f) {
  const Alphabet &alphabet = f.alphabet();
  PBWPolyQ result(alphabet);
  FreePolyQ rem = f;
  while (!rem.is_zero()) {
    const auto [w, c] = *rem.terms().begin();
    PBWMonomial m = w.empty() ? PBWMonomial() : PBWMonomial::from_factors(cfl_factorize(w));
    if (!triangular_leading_word(m, alphabet))
      return pbw_rewrite_linear(f);
    result.add_term(m, c);
    rem -= pbw_expand(m, alphabet).scale(c);
  }
  return result;
}

std::vector<PBWMonomial> pbw_monomials_of_multidegree(const std::vector<int> &counts) {
  std::vector<Letter> letters;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x] < 0)
      throw Error("negative multidegree entry");
    letters.insert(letters.end(), static_cast<std::size_t>(counts[x]),
                   static_cast<Letter>(x + 1));
  }
  std::vector<PBWMonomial> out;
  if (letters.empty()) {
    out.emplace_back();
    return out;
  }
  do {
    out.push_back(PBWMonomial::from_factors(cfl_factorize(Word(letters))));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace {

std::vector<int> letter_counts(const Word &w, int alphabet_size) {
  std::vector<int> c(static_cast<std::size_t>(alphabet_size), 0);
  for (Letter x : w)
    ++c[x - 1];
  return c;
}

// Solves A c = b exactly; A is square and invertible by the PBW theorem.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw TheoremViolation("PBW monomials of one multidegree are linearly dependent");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k)
        a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

} // namespace

PBWPolyQ pbw_rewrite_linear(const FreePolyQ &f) {
  const Alphabet &alphabet = f.alphabet();
  std::map<std::vector<int>, std::map<Word, Rational>> components;
  for (const auto &[w, c] : f.terms())
    components[letter_counts(w, alphabet.size)].emplace(w, c);

  PBWPolyQ result(alphabet);
  for (const auto &[counts, terms] : components) {
    std::vector<PBWMonomial> basis = pbw_monomials_of_multidegree(counts);
    // rows indexed by the words of this multidegree, via the CFL bijection
    std::map<Word, std::size_t> row;
    for (const auto &m : basis)
      row.emplace(m.concatenation(), row.size());
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (const auto &[w, c] : pbw_expand(basis[j], alphabet).terms())
        a[row.at(w)][j] = c;
    std::vector<Rational> b(n);
    for (const auto &[w, c] : terms)
      b[row.at(w)] = c;
    std::vector<Rational> x = solve_exact(std::move(a), std::move(b));
    for (std::size_t j = 0; j < n; ++j)
      result.add_term(basis[j], x[j]);
  }
  return result;
}

CommutatorResult commutator_ls(const LyndonWord &alpha, const LyndonWord &beta,
                               const Alphabet &alphabet) {
  if (!(alpha < beta))
    throw OrderViolation("commutator_ls needs alpha < beta, got " + to_string(alpha.word()) +
                         " and " + to_string(beta.word()));
  CommutatorResult r;
  r.value = pbw_rewrite(commutator(ls_basis_element(alpha, alphabet),
                                   ls_basis_element(beta, alphabet)));
  const Word ab = alpha.word() + beta.word();
  const auto fail = [&](const std::string &why) {
    throw TheoremViolation("[E_" + to_string(alpha.word()) + ", E_" + to_string(beta.word()) +
                           "]: " + why);
  };
  if (!is_lyndon(ab))
    fail("concatenation is not Lyndon");

  r.single_bracket = alpha.size() == 1 || !(standard_factorization(alpha).second.word() < beta.word());
  if (r.single_bracket) {
    PBWPolyQ expected(alphabet);
    expected.add_term(PBWMonomial::from_factors(std::vector<Word>{ab}), 1);
    if (!(r.value == expected))
      fail("expected the single bracket E_" + to_string(ab));
    return r;
  }
  for (const auto &[m, c] : r.value.terms()) {
    if (m.factors().size() != 1)
      fail("product monomial " + to_text<Rational>(m) + " appears");
    const Word &g = m.factors().front();
    if (g < ab || !(g < beta.word()))
      fail("E_" + to_string(g) + " outside [ab, b)");
    for (Letter x = 1; x <= alphabet.size; ++x)
      if (g.count(x) != ab.count(x))
        fail("E_" + to_string(g) + " has the wrong multidegree");
  }
  if (!r.value.find(PBWMonomial::from_factors(std::vector<Word>{ab})))
    fail("coefficient of E_" + to_string(ab) + " vanishes");
  return r;
}

bool refined_commutator_claim(const LyndonWord &alpha, const LyndonWord &beta,
                              const Alphabet &alphabet) {
  if (alpha.size() < 2)
    return true;
  const Word alpha_r = standard_factorization(alpha).second.word();
  if (!(alpha_r < beta.word()))
    return true;
  PBWPolyQ v = pbw_rewrite(
      commutator(ls_basis_element(alpha, alphabet), ls_basis_element(beta, alphabet)));
  for (const auto &[m, c] : v.terms()) {
    if (m.factors().size() != 1 || m.factors().front().size() < 2)
      return false;
    const Word gamma_r = standard_factorization(LyndonWord(m.factors().front())).second.word();
    if (gamma_r < alpha_r || !(gamma_r < beta.word()))
      return false;
  }
  return true;
}

PBWPoly<PrimeFieldElem> reduce_mod_p(const PBWPolyQ &p, std::int64_t prime) {
  return p.map_coefficients([prime](const Rational &c) { return PrimeFieldElem::reduce(c, prime); });
}

} // namespace ncb
