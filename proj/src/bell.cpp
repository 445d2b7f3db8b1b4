#include "ncbinom/bell.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace ncb {

namespace {

using BellKey = std::tuple<bool, int, int, int, int, int>;

std::mutex bell_mutex;
std::map<BellKey, FreePolyQ> bell_cache;

BellKey key_of(bool dual, int n, int k, const BellRoles &r) {
  return {dual, n, k, r.x, r.y, r.alphabet_size};
}

const FreePolyQ *cached(const BellKey &key) {
  std::lock_guard lock(bell_mutex);
  auto it = bell_cache.find(key);
  return it == bell_cache.end() ? nullptr : &it->second;
}

const FreePolyQ &store(const BellKey &key, FreePolyQ value) {
  std::lock_guard lock(bell_mutex);
  return bell_cache.try_emplace(key, std::move(value)).first->second;
}

void check_indices(int n, int k) {
  if (n < 0 || k < 0)
    throw Error("Bell indices must be nonnegative");
}

} // namespace

const FreePolyQ &bell_partial_word(int n, int k, const BellRoles &roles) {
  check_indices(n, k);
  const BellKey key = key_of(false, n, k, roles);
  if (const FreePolyQ *hit = cached(key))
    return *hit;
  const Alphabet ab(roles.alphabet_size);
  FreePolyQ r(ab);
  if (n == 0 && k == 0) {
    r = FreePolyQ::unit(ab);
  } else if (k > 0 && k <= n) {
    const FreePolyQ x = FreePolyQ::letter(ab, roles.x), y = FreePolyQ::letter(ab, roles.y);
    r = y * bell_partial_word(n - 1, k - 1, roles) + commutator(x, bell_partial_word(n - 1, k, roles));
  }
  return store(key, std::move(r));
}

BellEntry bell_partial(int n, int k) {
  const FreePolyQ &w = bell_partial_word(n, k);
  return {w, pbw_rewrite(w)};
}

FreePolyQ bell_word(int n, const BellRoles &roles) {
  FreePolyQ r(Alphabet(roles.alphabet_size));
  for (int k = 0; k <= n; ++k)
    r += bell_partial_word(n, k, roles);
  return r;
}

const FreePolyQ &bell_dual_word(int n, int k, const BellRoles &roles) {
  check_indices(n, k);
  const BellKey key = key_of(true, n, k, roles);
  if (const FreePolyQ *hit = cached(key))
    return *hit;
  const Alphabet ab(roles.alphabet_size);
  FreePolyQ r(ab);
  if (n == 0 && k == 0) {
    r = FreePolyQ::unit(ab);
  } else if (k > 0 && k <= n) {
    const FreePolyQ x = FreePolyQ::letter(ab, roles.x), y = FreePolyQ::letter(ab, roles.y);
    r = commutator(bell_dual_word(n - 1, k, roles), x) + bell_dual_word(n - 1, k - 1, roles) * y;
  }
  return store(key, std::move(r));
}

PBWPolyQ bell_dual(int n, int k, const BellRoles &roles) {
  return pbw_rewrite(bell_dual_word(n, k, roles));
}

FreePolyQ bell_dual_total_word(int n, const BellRoles &roles) {
  FreePolyQ r(Alphabet(roles.alphabet_size));
  for (int k = 0; k <= n; ++k)
    r += bell_dual_word(n, k, roles);
  return r;
}

FreePolyQ binomial_via_bell(int n) {
  const BellRoles roles = BellRoles::standard();
  const Alphabet ab(2);
  const FreePolyQ x = FreePolyQ::letter(ab, roles.x);
  FreePolyQ r(ab);
  for (int k = 0; k <= n; ++k)
    r += (bell_word(k, roles) * power(x, static_cast<unsigned>(n - k)))
             .scale(Rational(binomial(n, k)));
  return r;
}

FreePolyQ binomial_via_bell_dual(int n) {
  const BellRoles roles = BellRoles::standard();
  const Alphabet ab(2);
  const FreePolyQ x = FreePolyQ::letter(ab, roles.x);
  FreePolyQ r(ab);
  for (int k = 0; k <= n; ++k)
    r += (power(x, static_cast<unsigned>(n - k)) * bell_dual_total_word(k, roles))
             .scale(Rational(binomial(n, k)));
  return r;
}

PBWPolyQ sh_filter(const MultiDegree &d, FilterSide side) {
  if (d.counts.size() != 2)
    throw AlphabetMismatch("sh_filter needs the two-letter alphabet");
  const Word e1 = Word::letter(1), e2 = Word::letter(2);
  return sh_pbw(d).filter([&](const PBWMonomial &m) {
    if (m.is_unit())
      return true;
    return side == FilterSide::RightmostNotE1 ? m.factors().back() != e1
                                              : m.factors().front() != e2;
  });
}

namespace {

bool has_letter_one_factor(const PBWMonomial &m) {
  return !m.is_unit() && m.factors().back() == Word::letter(1);
}

} // namespace

PBWPolyQ bell_ls_form(int n, int k) {
  check_indices(n, k);
  PBWPolyQ r(Alphabet(2));
  if (k <= n) {
    for (const auto &m : pbw_monomials_of_multidegree({n - k, k}))
      if (!has_letter_one_factor(m))
        r.add_term(m, coeff_closed_form(m));
  }
  if (!(r == bell_partial(n, k).pbw))
    throw TheoremViolation("closed-form B_{" + std::to_string(n) + "," + std::to_string(k) +
                           "} disagrees with the rewritten recursion");
  return r;
}

PBWPolyQ bell_ls_form_multi(int m, int n, int k) {
  check_indices(n, k);
  if (m < 2)
    throw Error("need at least two letters");
  const Alphabet ab(m);
  PBWPolyQ r(ab);
  if (k <= n) {
    // every split of k among letters 2..m
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    counts[0] = n - k;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == counts.size()) {
        counts[i] = left;
        for (const auto &mono : pbw_monomials_of_multidegree(counts))
          if (!has_letter_one_factor(mono))
            r.add_term(mono, coeff_closed_form(mono));
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[i] = c;
        rec(i + 1, left - c);
      }
    };
    rec(1, k);
  }
  // word-level recursion with y = E_2 + ... + E_m
  FreePolyQ y(ab);
  for (int l = 2; l <= m; ++l)
    y += FreePolyQ::letter(ab, static_cast<Letter>(l));
  const FreePolyQ x = FreePolyQ::letter(ab, 1);
  std::map<std::pair<int, int>, FreePolyQ> table;
  std::function<const FreePolyQ &(int, int)> b = [&](int nn, int kk) -> const FreePolyQ & {
    auto it = table.find({nn, kk});
    if (it != table.end())
      return it->second;
    FreePolyQ v(ab);
    if (nn == 0 && kk == 0)
      v = FreePolyQ::unit(ab);
    else if (kk > 0 && kk <= nn)
      v = y * b(nn - 1, kk - 1) + commutator(x, b(nn - 1, kk));
    return table.emplace(std::make_pair(nn, kk), std::move(v)).first->second;
  };
  if (!(r == pbw_rewrite(b(n, k))))
    throw TheoremViolation("multinomial closed-form Bell polynomial disagrees with the recursion");
  return r;
}

PBWPolyQ classical_bell_formula(int n) {
  if (n < 0)
    throw Error("negative degree");
  PBWPolyQ r(Alphabet(2));
  // k_1 + 2 k_2 + ... + n k_n = n; y^{(j-1)} -> E_{1^{j-1} 2}
  std::vector<int> ks(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (left == 0) {
      Integer den = 1;
      std::vector<Word> factors;
      for (int i = 1; i <= n; ++i) {
        if (ks[i] == 0)
          continue;
        Integer fi = factorial(static_cast<unsigned>(i)), p;
        mpz_pow_ui(p.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(ks[i]));
        den *= factorial(static_cast<unsigned>(ks[i])) * p;
        const Word omega = Word::repeat(1, static_cast<std::size_t>(i - 1)) + Word::letter(2);
        factors.insert(factors.end(), static_cast<std::size_t>(ks[i]), omega);
      }
      Rational c(factorial(static_cast<unsigned>(n)), den);
      c.canonicalize();
      r.add_term(PBWMonomial::from_factors(std::move(factors)), c);
      return;
    }
    if (j > n)
      return;
    for (int t = 0; t * j <= left; ++t) {
      ks[j] = t;
      rec(j + 1, left - t * j);
    }
    ks[j] = 0;
  };
  rec(1, n);
  return r;
}

PBWPolyQ classical_bell_project(int n) {
  PBWPolyQ total = pbw_rewrite(bell_word(n));
  PBWPolyQ r = total.filter([](const PBWMonomial &m) {
    for (const auto &f : m.factors())
      if (f.count(2) >= 2)
        return false;
    return true;
  });
  if (!(r == classical_bell_formula(n)))
    throw TheoremViolation("classical Bell projection of degree " + std::to_string(n) +
                           " disagrees with the classical formula");
  return r;
}

} // namespace ncb
