#include "ncbinom/qsigma.hpp"

#include <map>
#include <mutex>
#include <random>

#include "ncbinom/bell.hpp"

namespace ncb {

struct Operator::Node {
  Kind kind;
  std::vector<FreePolyQq> images;
  QPoly q;
  FreePolyQq elem;
  std::shared_ptr<const Node> a, b;
};

namespace {

QPoly qpow(const QPoly &q, std::size_t k) {
  QPoly r(1);
  for (std::size_t i = 0; i < k; ++i)
    r *= q;
  return r;
}

const Alphabet AB2(2);

} // namespace

Operator Operator::identity() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  return Operator(n);
}

Operator Operator::endomorphism(std::vector<FreePolyQq> images, QPoly unit_image) {
  if (images.empty())
    throw Error("endomorphism needs generator images");
  for (const auto &im : images)
    if (!(im.alphabet() == images.front().alphabet()))
      throw AlphabetMismatch("generator images over different alphabets");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Endomorphism;
  n->images = std::move(images);
  n->q = std::move(unit_image);
  return Operator(n);
}

Operator Operator::grading(QPoly q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Grading;
  n->q = std::move(q);
  return Operator(n);
}

Operator Operator::ad_sigma(FreePolyQq x, Operator sigma) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AdSigma;
  n->elem = std::move(x);
  n->a = sigma.node_;
  return Operator(n);
}

Operator Operator::left_mult(FreePolyQq f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LeftMult;
  n->elem = std::move(f);
  return Operator(n);
}

Operator Operator::sigma_derivation(Operator sigma, std::vector<FreePolyQq> images) {
  if (images.empty())
    throw Error("sigma-derivation needs generator images");
  auto n = std::make_shared<Node>();
  n->kind = Kind::SigmaDerivation;
  n->images = std::move(images);
  n->a = sigma.node_;
  return Operator(n);
}

Operator Operator::scaled(QPoly c, Operator op) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scale;
  n->q = std::move(c);
  n->a = op.node_;
  return Operator(n);
}

Operator Operator::operator+(const Operator &o) const {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->a = node_;
  n->b = o.node_;
  return Operator(n);
}

Operator Operator::operator*(const Operator &o) const {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->a = node_;
  n->b = o.node_;
  return Operator(n);
}

Operator Operator::power(unsigned m) const {
  if (m == 0)
    return identity();
  Operator r = *this;
  for (unsigned i = 1; i < m; ++i)
    r = *this * r;
  return r;
}

Operator::Kind Operator::kind() const { return node_->kind; }

std::string Operator::describe() const {
  switch (node_->kind) {
  case Kind::Identity:
    return "id";
  case Kind::Endomorphism:
    return "endo(" + std::to_string(node_->images.size()) + " images)";
  case Kind::Grading:
    return "grading(" + node_->q.to_text() + ")";
  case Kind::AdSigma:
    return "ad_[" + Operator(node_->a).describe() + "](" + to_text(node_->elem) + ")";
  case Kind::LeftMult:
    return "L(" + to_text(node_->elem) + ")";
  case Kind::SigmaDerivation:
    return "delta[" + Operator(node_->a).describe() + "]";
  case Kind::Sum:
    return "(" + Operator(node_->a).describe() + " + " + Operator(node_->b).describe() + ")";
  case Kind::Compose:
    return Operator(node_->a).describe() + " o " + Operator(node_->b).describe();
  case Kind::Scale:
    return "(" + node_->q.to_text() + ")*" + Operator(node_->a).describe();
  }
  return "?";
}

FreePolyQq Operator::apply(const FreePolyQq &f) const {
  const Node &n = *node_;
  const Alphabet &ab = f.alphabet();
  switch (n.kind) {
  case Kind::Identity:
    return f;
  case Kind::Endomorphism: {
    if (n.images.size() < static_cast<std::size_t>(ab.size))
      throw AlphabetMismatch("endomorphism has no image for some letters");
    FreePolyQq r(ab);
    for (const auto &[w, c] : f.terms()) {
      if (w.empty()) {
        if (!(n.q == QPoly(1)))
          throw NotUnital("endomorphism sends 1 to " + n.q.to_text());
        r.add_term(w, c);
        continue;
      }
      FreePolyQq t = FreePolyQq::monomial(ab, Word(), c);
      for (Letter x : w)
        t = t * n.images[x - 1].widen(ab);
      r += t;
    }
    return r;
  }
  case Kind::Grading: {
    FreePolyQq r(ab);
    for (const auto &[w, c] : f.terms())
      r.add_term(w, c * qpow(n.q, w.size()));
    return r;
  }
  case Kind::AdSigma: {
    const FreePolyQq x = n.elem.widen(ab);
    return x * f - Operator(n.a).apply(f) * x;
  }
  case Kind::LeftMult:
    return n.elem.widen(ab) * f;
  case Kind::SigmaDerivation: {
    // delta(a_1...a_m) = sum_i sigma(a_1...a_{i-1}) delta(a_i) a_{i+1}...a_m
    const Operator sigma(n.a);
    FreePolyQq r(ab);
    for (const auto &[w, c] : f.terms()) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (static_cast<std::size_t>(w[i]) > n.images.size())
          throw AlphabetMismatch("sigma-derivation has no image for letter " + std::to_string(w[i]));
        FreePolyQq pre = sigma.apply(FreePolyQq::monomial(ab, w.substr(0, i), c));
        FreePolyQq post = FreePolyQq::monomial(ab, w.substr(i + 1), QPoly(1));
        r += pre * n.images[w[i] - 1].widen(ab) * post;
      }
    }
    return r;
  }
  case Kind::Sum:
    return Operator(n.a).apply(f) + Operator(n.b).apply(f);
  case Kind::Compose:
    return Operator(n.a).apply(Operator(n.b).apply(f));
  case Kind::Scale:
    return Operator(n.a).apply(f).scale(n.q);
  }
  throw Error("unknown operator kind");
}

FreePolyQq apply_operator(const Operator &op, const FreePolyQq &f) { return op.apply(f); }

namespace {

FreePolyQq random_poly(std::mt19937_64 &rng, const Alphabet &ab) {
  std::uniform_int_distribution<int> len(0, 3), letter(1, ab.size), coef(-3, 3), nterms(1, 3);
  FreePolyQq p(ab);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<Letter> v(static_cast<std::size_t>(len(rng)));
    for (auto &x : v)
      x = static_cast<Letter>(letter(rng));
    int c = coef(rng);
    p.add_term(Word(v), QPoly(c == 0 ? 1 : c));
  }
  return p;
}

constexpr int SAMPLES = 24;

} // namespace

void check_endomorphism(const Operator &sigma, const Alphabet &alphabet, std::uint64_t seed) {
  const FreePolyQq one = FreePolyQq::unit(alphabet);
  if (!(sigma.apply(one) == one))
    throw NotUnital(sigma.describe() + " does not fix 1");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < SAMPLES; ++i) {
    FreePolyQq u = random_poly(rng, alphabet), v = random_poly(rng, alphabet);
    if (!(sigma.apply(u * v) == sigma.apply(u) * sigma.apply(v)))
      throw TheoremViolation(sigma.describe() + " is not multiplicative on " + to_text(u) +
                             " and " + to_text(v));
  }
}

void check_sigma_derivation(const Operator &delta, const Operator &sigma, const Alphabet &alphabet,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < SAMPLES; ++i) {
    FreePolyQq u = random_poly(rng, alphabet), v = random_poly(rng, alphabet);
    FreePolyQq lhs = delta.apply(u * v);
    FreePolyQq rhs = delta.apply(u) * v + sigma.apply(u) * delta.apply(v);
    if (!(lhs == rhs))
      throw NotASigmaDerivation(delta.describe() + " breaks the Leibniz rule on " + to_text(u) +
                                " and " + to_text(v));
  }
}

FreePolyQq qx() { return FreePolyQq::letter(AB2, 1); }
FreePolyQq qy() { return FreePolyQq::letter(AB2, 2); }

namespace {

std::vector<std::vector<FreePolyQq>> sh_hat_grid(int n, const FreePolyQq &x, const FreePolyQq &y,
                                                 const Operator &sigma, const FreePolyQq &f) {
  const Operator Y = Operator::ad_sigma(x, sigma) + Operator::left_mult(y);
  return shuffle_operator_grid<FreePolyQq>(
      n, f, [&](const FreePolyQq &g) { return sigma.apply(g); },
      [&](const FreePolyQq &g) { return Y.apply(g); });
}

} // namespace

FreePolyQq sh_hat_apply(int k, int j, const FreePolyQq &x, const FreePolyQq &y,
                        const Operator &sigma, const FreePolyQq &f) {
  if (k < 0 || j < 0)
    throw Error("negative shuffle index");
  return sh_hat_grid(k + j, x, y, sigma, f)[k][j];
}

FreePolyQq sh_hat_apply(int k, int j, const FreePolyQq &x, const FreePolyQq &y,
                        const Operator &sigma) {
  return sh_hat_apply(k, j, x, y, sigma, FreePolyQq::unit(x.alphabet()));
}

bool theorem_b_verify(int n, const Operator &sigma) {
  if (n < 0)
    throw Error("negative degree");
  const FreePolyQq x = qx(), y = qy();
  auto g = sh_hat_grid(n, x, y, sigma, FreePolyQq::unit(AB2));
  FreePolyQq rhs(AB2);
  for (int k = 0; k <= n; ++k)
    rhs += g[k][n - k] * power(x, static_cast<unsigned>(n - k));
  return rhs == power(x + y, static_cast<unsigned>(n));
}

bool theorem_b_identity_case(int n) {
  auto g = sh_hat_grid(n, qx(), qy(), Operator::identity(), FreePolyQq::unit(AB2));
  for (int k = 0; k <= n; ++k)
    if (!(g[k][n - k] == to_qpoly(bell_word(k)).scale(QPoly(Rational(binomial(n, k))))))
      return false;
  return true;
}

std::vector<std::vector<int>> nondecreasing_tuples(int k, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int m = lo; m <= top; ++m) {
      cur.push_back(m);
      rec(m);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

std::vector<FreePolyQq> word_basket() {
  std::vector<FreePolyQq> b;
  for (const char *s : {"", "1", "2", "11", "12", "21", "22"})
    b.push_back(FreePolyQq::monomial(AB2, parse_word(s, AB2), QPoly(1)));
  b.push_back(qx() + qy().scale(QPoly(2)) * qx());
  return b;
}

} // namespace

bool d_m_factorization_check(int n, int k, const Operator &sigma) {
  if (k < 1 || k > n)
    throw Error("need 1 <= k <= n");
  const FreePolyQq x = qx(), y = qy();
  std::vector<Operator> D;
  for (int m = 0; m <= n - k; ++m) {
    const Operator sm = sigma.power(static_cast<unsigned>(m));
    D.push_back(Operator::ad_sigma(sm.apply(x), sigma) + Operator::left_mult(sm.apply(y)));
  }
  const Operator tail = sigma.power(static_cast<unsigned>(n - k));
  const auto tuples = nondecreasing_tuples(k, n - k);
  for (const auto &f : word_basket()) {
    FreePolyQq rhs(AB2);
    for (const auto &t : tuples) {
      FreePolyQq v = tail.apply(f);
      for (auto it = t.rbegin(); it != t.rend(); ++it)
        v = D[static_cast<std::size_t>(*it)].apply(v);
      rhs += v;
    }
    if (!(sh_hat_apply(k, n - k, x, y, sigma, f) == rhs))
      return false;
  }
  // the form at 1 with only D_0 and powers of sigma
  FreePolyQq at_one(AB2);
  for (const auto &t : tuples) {
    FreePolyQq v = FreePolyQq::unit(AB2);
    for (int i = k - 1; i >= 0; --i) {
      v = D[0].apply(v);
      const int gap = t[static_cast<std::size_t>(i)] - (i == 0 ? 0 : t[static_cast<std::size_t>(i - 1)]);
      v = sigma.power(static_cast<unsigned>(gap)).apply(v);
    }
    at_one += v;
  }
  return at_one == sh_hat_apply(k, n - k, x, y, sigma);
}

bool sigma_adjoint_check(int m, const Operator &sigma) {
  const FreePolyQq x = qx(), y = qy();
  const Operator sm = sigma.power(static_cast<unsigned>(m));
  const Operator lhs = sm * (Operator::ad_sigma(x, sigma) + Operator::left_mult(y));
  const Operator rhs =
      (Operator::ad_sigma(sm.apply(x), sigma) + Operator::left_mult(sm.apply(y))) * sm;
  for (const auto &f : word_basket())
    if (!(lhs.apply(f) == rhs.apply(f)))
      return false;
  return true;
}

namespace {

std::mutex q_mutex;
std::map<int, FreePolyQq> deriv_cache, total_cache;
std::map<std::pair<int, int>, FreePolyQq> partial_cache;

const Operator &ad_q() {
  static const Operator op = Operator::ad_sigma(qx(), Operator::grading());
  return op;
}

template <class K>
const FreePolyQq *lookup(std::map<K, FreePolyQq> &m, const K &key) {
  std::lock_guard lock(q_mutex);
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

template <class K>
const FreePolyQq &remember(std::map<K, FreePolyQq> &m, const K &key, FreePolyQq v) {
  std::lock_guard lock(q_mutex);
  return m.try_emplace(key, std::move(v)).first->second;
}

} // namespace

const FreePolyQq &q_derivative(int j) {
  if (j < 0)
    throw Error("negative derivative order");
  if (const FreePolyQq *hit = lookup(deriv_cache, j))
    return *hit;
  FreePolyQq v = j == 0 ? qy() : ad_q().apply(q_derivative(j - 1));
  return remember(deriv_cache, j, std::move(v));
}

const FreePolyQq &qbell_partial(int n, int k) {
  if (n < 0 || k < 0)
    throw Error("negative index");
  if (const FreePolyQq *hit = lookup(partial_cache, std::make_pair(n, k)))
    return *hit;
  FreePolyQq v(AB2);
  if (n == 0 && k == 0)
    v = FreePolyQq::unit(AB2);
  else if (k > 0 && k <= n)
    v = qy() * qbell_partial(n - 1, k - 1) + ad_q().apply(qbell_partial(n - 1, k));
  return remember(partial_cache, std::make_pair(n, k), std::move(v));
}

const FreePolyQq &qbell(int n) {
  if (n < 0)
    throw Error("negative index");
  if (const FreePolyQq *hit = lookup(total_cache, n))
    return *hit;
  FreePolyQq v = FreePolyQq::unit(AB2);
  const Operator D0 = ad_q() + Operator::left_mult(qy());
  for (int i = 0; i < n; ++i)
    v = D0.apply(v);
  FreePolyQq sum(AB2);
  for (int k = 0; k <= n; ++k)
    sum += qbell_partial(n, k);
  if (!(sum == v))
    throw TheoremViolation("partial q-Bell polynomials of degree " + std::to_string(n) +
                           " do not sum to the total");
  return remember(total_cache, n, std::move(v));
}

FreePolyQq qbell_partial_sum_form(int n, int k, bool literal) {
  FreePolyQq r(AB2);
  if (k < 1 || k > n)
    return n == 0 && k == 0 ? FreePolyQq::unit(AB2) : r;
  for (int l = k - 1; l <= n - 1; ++l)
    r += (qbell_partial(l, k - 1) * q_derivative(literal ? n - l : n - 1 - l))
             .scale(q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(l)));
  return r;
}

bool binomial_q_verify(int n) {
  if (n < 0)
    throw Error("negative degree");
  const FreePolyQq x = qx(), y = qy();
  FreePolyQq rhs(AB2);
  for (int k = 0; k <= n; ++k)
    rhs += (qbell(k) * power(x, static_cast<unsigned>(n - k)))
               .scale(q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  if (!(rhs == power(x + y, static_cast<unsigned>(n))))
    return false;
  auto g = sh_hat_grid(n, x, y, Operator::grading(), FreePolyQq::unit(AB2));
  for (int k = 0; k <= n; ++k)
    if (!(g[k][n - k] ==
          qbell(k).scale(q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))))
      return false;
  return true;
}

FreePolyQ evaluate_q(const FreePolyQq &f, const Rational &q) {
  return f.map_coefficients([&](const QPoly &c) { return c.evaluate(q); });
}

FreePolyQq to_qpoly(const FreePolyQ &f) {
  return f.map_coefficients([](const Rational &c) { return QPoly(c); });
}

std::vector<FreePolyQq> ore_binomial(int n, const Operator &sigma, const Operator &delta) {
  if (n < 0)
    throw Error("negative degree");
  check_endomorphism(sigma, AB2);
  check_sigma_derivation(delta, sigma, AB2);
  const Operator Y = delta + Operator::left_mult(qy());
  auto g = shuffle_operator_grid<FreePolyQq>(
      n, FreePolyQq::unit(AB2), [&](const FreePolyQq &f) { return sigma.apply(f); },
      [&](const FreePolyQq &f) { return Y.apply(f); });
  std::vector<FreePolyQq> out;
  for (int k = 0; k <= n; ++k)
    out.push_back(g[k][n - k]);
  return out;
}

namespace {

// Polynomials in u_0 = y, u_1 = dy, u_2 = d^2 y, ... (commuting variables).
struct DiffPoly {
  std::map<std::vector<int>, Rational> terms;
  std::size_t vars = 0;

  DiffPoly operator+(const DiffPoly &o) const {
    DiffPoly r = *this;
    for (const auto &[e, c] : o.terms)
      r.add(e, c);
    return r;
  }
  void add(const std::vector<int> &e, const Rational &c) {
    Rational &slot = terms[e];
    slot += c;
    if (slot == 0)
      terms.erase(e);
  }
  bool operator==(const DiffPoly &o) const { return terms == o.terms; }
};

DiffPoly diff_unit(std::size_t vars) {
  DiffPoly p;
  p.vars = vars;
  p.add(std::vector<int>(vars, 0), 1);
  return p;
}

DiffPoly diff_delta(const DiffPoly &f) {
  DiffPoly r;
  r.vars = f.vars;
  for (const auto &[e, c] : f.terms)
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      std::vector<int> d = e;
      --d[i];
      ++d[i + 1];
      r.add(d, c * e[i]);
    }
  return r;
}

DiffPoly diff_times_y(const DiffPoly &f) {
  DiffPoly r;
  r.vars = f.vars;
  for (const auto &[e, c] : f.terms) {
    std::vector<int> d = e;
    ++d[0];
    r.add(d, c);
  }
  return r;
}

// k! sum prod (u_{j-1}/j!)^{r_j} / r_j! over r_1 + 2 r_2 + ... + k r_k = k
DiffPoly classical_bell_diff(int k, std::size_t vars) {
  DiffPoly r;
  r.vars = vars;
  std::vector<int> rs(static_cast<std::size_t>(k) + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (left == 0) {
      Integer den = 1;
      std::vector<int> e(vars, 0);
      for (int i = 1; i <= k; ++i) {
        if (rs[i] == 0)
          continue;
        Integer fi = factorial(static_cast<unsigned>(i)), p;
        mpz_pow_ui(p.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(rs[i]));
        den *= factorial(static_cast<unsigned>(rs[i])) * p;
        e[static_cast<std::size_t>(i - 1)] = rs[i];
      }
      Rational c{factorial(static_cast<unsigned>(k)), den};
      c.canonicalize();
      r.add(e, c);
      return;
    }
    if (j > k)
      return;
    for (int t = 0; t * j <= left; ++t) {
      rs[j] = t;
      rec(j + 1, left - t * j);
    }
    rs[j] = 0;
  };
  rec(1, k);
  return r;
}

} // namespace

bool ore_commutative_check(int n) {
  if (n < 0)
    throw Error("negative degree");
  const std::size_t vars = static_cast<std::size_t>(n) + 2;
  auto g = shuffle_operator_grid<DiffPoly>(
      n, diff_unit(vars), [](const DiffPoly &f) { return f; },
      [](const DiffPoly &f) { return diff_delta(f) + diff_times_y(f); });
  for (int k = 0; k <= n; ++k) {
    DiffPoly expect = classical_bell_diff(k, vars);
    const Integer b = binomial(n, k);
    for (auto &[e, c] : expect.terms)
      c *= b;
    if (!(g[k][n - k] == expect))
      return false;
  }
  return true;
}

} // namespace ncb
