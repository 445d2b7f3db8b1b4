#include "ncbinom/quotients.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ncbinom/qsigma.hpp"
#include "ncbinom/shuffle.hpp"

namespace ncb {

KillSet::KillSet(std::vector<Word> generators) {
  for (auto &w : generators) {
    if (!is_lyndon(w))
      throw Error(to_string(w) + " is not a Lyndon word");
    gens_.insert(std::move(w));
  }
}

KillSet KillSet::parse(const std::string &text) {
  std::vector<Word> words;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty())
      words.push_back(parse_word(tok, Alphabet(9)));
  try {
    return KillSet(std::move(words));
  } catch (const Error &e) {
    throw ParseError(e.what());
  }
}

bool KillSet::kills(const Word &w) const {
  if (gens_.count(w))
    return true;
  if (w.size() < 2 || gens_.empty())
    return false;
  auto [beta, gamma] = standard_factorization(LyndonWord(w));
  return kills(beta.word()) || kills(gamma.word());
}

namespace {

std::array<int, 3> disorder(const std::string &w) {
  std::array<int, 3> m{0, 0, 0};
  int xs = 0, hs = 0;
  for (char c : w) {
    if (c == 'y') {
      m[0] += xs;
      m[2] += hs;
    } else if (c == 'h') {
      m[1] += xs;
      ++hs;
    } else {
      ++xs;
    }
  }
  return m;
}

template <class R>
std::map<YHX, R> normal_order_sum(std::map<std::string, R> pending, const R &q) {
  const R q2 = q * q;
  std::map<YHX, R> out;
  auto push = [](std::map<std::string, R> &m, const std::string &w, const R &c) {
    auto [it, fresh] = m.try_emplace(w, c);
    if (!fresh)
      it->second = it->second + c;
  };
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string w = node.key();
    const R c = node.mapped();
    if (c == R(0))
      continue;
    for (char ch : w)
      if (ch != 'x' && ch != 'y' && ch != 'h')
        throw ParseError(std::string("unexpected symbol '") + ch + "'");
    std::size_t i = 0;
    while (i + 1 < w.size()) {
      const std::string pair = w.substr(i, 2);
      if (pair == "xy" || pair == "xh" || pair == "hy")
        break;
      ++i;
    }
    if (i + 1 >= w.size()) {
      YHX e{static_cast<int>(std::count(w.begin(), w.end(), 'y')),
            static_cast<int>(std::count(w.begin(), w.end(), 'h')),
            static_cast<int>(std::count(w.begin(), w.end(), 'x'))};
      auto [it, fresh] = out.try_emplace(e, c);
      if (!fresh)
        it->second = it->second + c;
      continue;
    }
    const std::string pre = w.substr(0, i), post = w.substr(i + 2), pair = w.substr(i, 2);
    std::vector<std::pair<std::string, R>> next;
    if (pair == "xy") {
      next.emplace_back(pre + "yx" + post, q);
      next.emplace_back(pre + "h" + post, R(1));
    } else if (pair == "xh") {
      next.emplace_back(pre + "hx" + post, q2);
    } else {
      next.emplace_back(pre + "yh" + post, q2);
    }
    const auto before = disorder(w);
    for (const auto &[nw, f] : next) {
      if (!(disorder(nw) < before))
        throw TheoremViolation("rewriting " + w + " -> " + nw + " does not lower the disorder");
      push(pending, nw, c * f);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == R(0) ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::string, Rational> all_binary_words(int n, Rational) {
  std::map<std::string, Rational> m{{"", 1}};
  for (int i = 0; i < n; ++i) {
    std::map<std::string, Rational> next;
    for (const auto &[w, c] : m) {
      next.emplace(w + "x", c);
      next.emplace(w + "y", c);
    }
    m = std::move(next);
  }
  return m;
}

std::map<std::string, QPoly> all_binary_words(int n, QPoly) {
  std::map<std::string, QPoly> m;
  for (const auto &[w, c] : all_binary_words(n, Rational(1)))
    m.emplace(w, QPoly(c));
  return m;
}

std::vector<YHX> yhx_exponents(int n) {
  std::vector<YHX> v;
  for (int s = 0; 2 * s <= n; ++s)
    for (int r = 0; r + 2 * s <= n; ++r)
      v.push_back({r, s, n - r - 2 * s});
  return v;
}

Rational ratio(const Integer &a, const Integer &b) {
  Rational r{a, b};
  r.canonicalize();
  return r;
}

Integer pow2(int e) {
  Integer r = 1;
  r <<= static_cast<unsigned long>(e);
  return r;
}

QPoly qpow_poly(const QPoly &b, int e) {
  QPoly r(1);
  for (int i = 0; i < e; ++i)
    r *= b;
  return r;
}

} // namespace

std::map<YHX, QPoly> blumen_normal_order(const std::string &word) {
  return normal_order_sum<QPoly>({{word, QPoly(1)}}, QPoly::q_power(1));
}

std::map<YHX, Rational> weyl_normal_order(const std::string &word) {
  return normal_order_sum<Rational>({{word, Rational(1)}}, Rational(1));
}

Rational heisenberg_weyl_coefficient(int n, int j, int i) {
  if (j < 0 || i < 0 || n - 2 * j - i < 0)
    return 0;
  const Integer den = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(i)) *
                      factorial(static_cast<unsigned>(n - 2 * j - i)) * pow2(j);
  return ratio(factorial(static_cast<unsigned>(n)), den);
}

std::map<YHX, Rational> weyl_binomial(int d) {
  if (d < 0)
    throw Error("negative degree");
  auto rewritten = normal_order_sum<Rational>(all_binary_words(d, Rational(1)), Rational(1));

  const Word e1 = Word::letter(1), e2 = Word::letter(2), e12{1, 2};
  std::map<YHX, Rational> projected;
  const PBWPolyQ killed =
      kill_project(binomial_ls(2, d), KillSet({Word{1, 1, 2}, Word{1, 2, 2}}));
  for (const auto &[m, c] : killed.terms()) {
    YHX e{0, 0, 0};
    for (const auto &[w, t] : m.runs()) {
      if (w == e2)
        e[0] = static_cast<int>(t);
      else if (w == e12)
        e[1] = static_cast<int>(t);
      else if (w == e1)
        e[2] = static_cast<int>(t);
      else
        throw TheoremViolation("E_" + to_string(w) + " survives the quotient");
    }
    projected.emplace(e, c);
  }

  std::map<YHX, Rational> closed, heis;
  for (const auto &[t2, t12, t1] : yhx_exponents(d)) {
    const Integer den = factorial(static_cast<unsigned>(t2)) * pow2(t12) *
                        factorial(static_cast<unsigned>(t12)) * factorial(static_cast<unsigned>(t1));
    closed.emplace(YHX{t2, t12, t1}, ratio(factorial(static_cast<unsigned>(d)), den));
    heis.emplace(YHX{t2, t12, t1}, heisenberg_weyl_coefficient(d, t12, t2));
  }
  if (rewritten != projected)
    throw TheoremViolation("Weyl rewriting disagrees with the projected expansion at d = " +
                           std::to_string(d));
  if (rewritten != closed || rewritten != heis)
    throw TheoremViolation("Weyl expansion disagrees with the closed form at d = " +
                           std::to_string(d));
  return rewritten;
}

QPoly blumen_closed_form(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0)
    throw Error("negative exponent");
  const QPoly den = q_factorial(static_cast<unsigned>(r)) * qpow_poly(q_integer(2), s) *
                    q_factorial(static_cast<unsigned>(s)).substitute_power(2) *
                    q_factorial(static_cast<unsigned>(t));
  return q_factorial(static_cast<unsigned>(r + 2 * s + t)).exact_div(den);
}

std::map<YHX, QPoly> blumen_binomial(int n) {
  if (n < 0)
    throw Error("negative degree");
  auto rewritten = normal_order_sum<QPoly>(all_binary_words(n, QPoly(1)), QPoly::q_power(1));
  std::map<YHX, QPoly> closed;
  for (const auto &[r, s, t] : yhx_exponents(n))
    closed.emplace(YHX{r, s, t}, blumen_closed_form(r, s, t));
  if (rewritten != closed)
    throw TheoremViolation("Blumen rewriting disagrees with the closed form at n = " +
                           std::to_string(n));
  return rewritten;
}

bool blumen_weyl_check(int n) {
  std::map<YHX, Rational> at_one;
  for (const auto &[e, c] : blumen_binomial(n))
    at_one.emplace(e, c.evaluate(1));
  return at_one == weyl_binomial(n);
}

bool blumen_higher_derivatives_vanish() {
  const QPoly q = QPoly::q_power(1);
  auto minus = [](std::map<YHX, QPoly> a, const std::map<YHX, QPoly> &b, const QPoly &f) {
    for (const auto &[e, c] : b) {
      a[e] -= c * f;
      if (a[e].is_zero())
        a.erase(e);
    }
    return a;
  };
  auto y1 = minus(blumen_normal_order("xy"), blumen_normal_order("yx"), q);
  auto y2 = minus(blumen_normal_order("xh"), blumen_normal_order("hx"), q * q);
  return y1 == std::map<YHX, QPoly>{{YHX{0, 1, 0}, QPoly(1)}} && y2.empty();
}

namespace {

QCommMonomial exponents_of(const std::vector<int> &sorted) {
  QCommMonomial e;
  for (int v : sorted) {
    if (v < 1)
      throw Error("symbol indices start at 1");
    if (static_cast<int>(e.size()) < v)
      e.resize(static_cast<std::size_t>(v), 0);
    ++e[static_cast<std::size_t>(v - 1)];
  }
  return e;
}

} // namespace

std::pair<QPoly, QCommMonomial> qcomm_normalize(const std::vector<int> &word) {
  std::vector<int> w = word;
  unsigned power = 0;
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        power += static_cast<unsigned>(w[i]);
        std::swap(w[i], w[i + 1]);
      }
  return {QPoly::q_power(power), exponents_of(w)};
}

std::pair<QPoly, QCommMonomial>
qcomm_normalize_with(const std::vector<int> &word,
                     const std::function<std::size_t(std::size_t)> &pick) {
  std::vector<int> w = word;
  unsigned power = 0;
  for (;;) {
    std::vector<std::size_t> inv;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1])
        inv.push_back(i);
    if (inv.empty())
      break;
    const std::size_t i = inv[pick(inv.size()) % inv.size()];
    power += static_cast<unsigned>(w[i]);
    std::swap(w[i], w[i + 1]);
  }
  return {QPoly::q_power(power), exponents_of(w)};
}

namespace {

const Alphabet D_ALPHABET(16);

std::mutex d_mutex;
std::map<std::pair<int, int>, FreePolyQq> d_cache;

QPoly q_mult_denominator(const QCommMonomial &t) {
  QPoly den(1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const unsigned idx = static_cast<unsigned>(i + 1);
    den *= qpow_poly(q_factorial(idx), t[i]);
    den *= q_factorial(static_cast<unsigned>(t[i])).substitute_power(idx);
  }
  return den;
}

// t_1 + ... + t_m = parts (or any count when parts < 0), sum i t_i = weight
void weighted_compositions(int weight, int parts, int max_index,
                           const std::function<void(const QCommMonomial &)> &emit) {
  QCommMonomial t(static_cast<std::size_t>(std::max(max_index, 0)), 0);
  std::function<void(int, int, int)> rec = [&](int i, int w, int p) {
    if (i > max_index) {
      if (w == 0 && (parts < 0 || p == 0)) {
        QCommMonomial e = t;
        while (!e.empty() && e.back() == 0)
          e.pop_back();
        emit(e);
      }
      return;
    }
    for (int c = 0; c * i <= w && (parts < 0 || c <= p); ++c) {
      t[static_cast<std::size_t>(i - 1)] = c;
      rec(i + 1, w - c * i, parts < 0 ? p : p - c);
    }
    t[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1, weight, parts);
}

void add_to(QCommPoly &p, const QCommMonomial &m, const QPoly &c) {
  auto [it, fresh] = p.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      p.erase(it);
  }
}

} // namespace

const FreePolyQq &qbell_partial_d_words(int n, int k) {
  if (n < 0 || k < 0)
    throw Error("negative index");
  if (n >= D_ALPHABET.size)
    throw Error("degree too large for the d alphabet");
  {
    std::lock_guard lock(d_mutex);
    auto it = d_cache.find({n, k});
    if (it != d_cache.end())
      return it->second;
  }
  FreePolyQq v(D_ALPHABET);
  if (n == 0 && k == 0) {
    v = FreePolyQq::unit(D_ALPHABET);
  } else if (k > 0 && k <= n) {
    for (int l = k - 1; l <= n - 1; ++l)
      v += (qbell_partial_d_words(l, k - 1) *
            FreePolyQq::letter(D_ALPHABET, static_cast<Letter>(n - l)))
               .scale(q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(l)));
  }
  std::lock_guard lock(d_mutex);
  return d_cache.try_emplace({n, k}, std::move(v)).first->second;
}

FreePolyQq substitute_derivatives(const FreePolyQq &d_poly) {
  const Alphabet ab(2);
  FreePolyQq r(ab);
  for (const auto &[w, c] : d_poly.terms()) {
    FreePolyQq t = FreePolyQq::monomial(ab, Word(), c);
    for (Letter i : w)
      t = t * q_derivative(i - 1);
    r += t;
  }
  return r;
}

QCommPoly qcomm_bell_closed_form(int n, int k) {
  if (n < 0 || k < 0)
    throw Error("negative index");
  QCommPoly r;
  if (n == 0 && k == 0) {
    r.emplace(QCommMonomial{}, QPoly(1));
    return r;
  }
  if (k == 0 || k > n)
    return r;
  const QPoly num = q_factorial(static_cast<unsigned>(n));
  weighted_compositions(n, k, n - k + 1, [&](const QCommMonomial &t) {
    add_to(r, t, num.exact_div(q_mult_denominator(t)));
  });
  return r;
}

QCommPoly qcomm_bell(int n, int k) {
  QCommPoly a;
  for (const auto &[w, c] : qbell_partial_d_words(n, k).terms()) {
    auto [f, m] = qcomm_normalize(std::vector<int>(w.begin(), w.end()));
    add_to(a, m, c * f);
  }
  if (a != qcomm_bell_closed_form(n, k))
    throw TheoremViolation("q-commutative Bell polynomial routes disagree at (" +
                           std::to_string(n) + "," + std::to_string(k) + ")");
  return a;
}

QCommPoly qcomm_bell_total(int n) {
  QCommPoly r;
  for (int k = 0; k <= n; ++k)
    for (const auto &[m, c] : qcomm_bell(n, k))
      add_to(r, m, c);
  return r;
}

std::map<std::pair<QCommMonomial, int>, QPoly> qcomm_binomial(int n) {
  if (n < 0)
    throw Error("negative degree");
  std::map<std::pair<QCommMonomial, int>, QPoly> closed, composed;
  const QPoly num = q_factorial(static_cast<unsigned>(n));
  for (int t = 0; t <= n; ++t)
    weighted_compositions(n - t, -1, n - t, [&](const QCommMonomial &m) {
      closed.emplace(std::make_pair(m, t),
                     num.exact_div(q_mult_denominator(m) * q_factorial(static_cast<unsigned>(t))));
    });
  for (int k = 0; k <= n; ++k) {
    const QPoly b = q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    for (const auto &[m, c] : qcomm_bell_total(k))
      composed[{m, n - k}] += b * c;
  }
  if (closed != composed)
    throw TheoremViolation("q-commutative binomial expansion disagrees with the q-Bell route at n = " +
                           std::to_string(n));
  return closed;
}

QCommPoly commutative_projection(const FreePolyQq &d_poly) {
  QCommPoly r;
  for (const auto &[w, c] : d_poly.terms()) {
    std::vector<int> s(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    add_to(r, exponents_of(s), c);
  }
  return r;
}

QCommPoly johnson_partial_qbell(int n, int k) {
  if (n < 0 || k < 0)
    throw Error("negative index");
  QCommPoly r;
  if (n == 0 && k == 0) {
    r.emplace(QCommMonomial{}, QPoly(1));
    return r;
  }
  if (k == 0 || k > n)
    return r;
  for (int l = k - 1; l <= n - 1; ++l) {
    const QPoly b = q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(l));
    for (const auto &[m, c] : johnson_partial_qbell(l, k - 1)) {
      QCommMonomial e = m;
      if (static_cast<int>(e.size()) < n - l)
        e.resize(static_cast<std::size_t>(n - l), 0);
      ++e[static_cast<std::size_t>(n - l - 1)];
      add_to(r, e, b * c);
    }
  }
  return r;
}

} // namespace ncb
