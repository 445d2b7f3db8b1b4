#include "doctest.h"

#include <algorithm>
#include <functional>

#include "ncbinom/words.hpp"

using namespace ncb;

namespace {

Word w(const char *s) { return parse_word(s, Alphabet(9)); }

std::vector<Word> all_words(int m, std::size_t len) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto &u : out)
      for (int x = 1; x <= m; ++x)
        next.push_back(u + Word::letter(static_cast<Letter>(x)));
    out = std::move(next);
  }
  return out;
}

// alpha < gamma*beta for every split alpha = beta*gamma with both parts nonempty
bool lyndon_by_rotation(const Word &a) {
  if (a.empty())
    return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!(a < a.substr(i) + a.substr(0, i)))
      return false;
  return true;
}

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      r = -r;
    }
  }
  return n > 1 ? -r : r;
}

long necklace_count(int m, int n) {
  long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (int i = 0; i < n / d; ++i)
        p *= m;
      s += mobius(d) * p;
    }
  return s / n;
}

// every factorization into non-increasing Lyndon words, by brute force
void all_lyndon_factorizations(const Word &rest, std::vector<Word> &cur,
                               std::vector<std::vector<Word>> &out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 1; i <= rest.size(); ++i) {
    Word head = rest.substr(0, i);
    if (!is_lyndon(head) || (!cur.empty() && cur.back() < head))
      continue;
    cur.push_back(head);
    all_lyndon_factorizations(rest.substr(i), cur, out);
    cur.pop_back();
  }
}

std::vector<Word> words_of(const std::vector<LyndonWord> &v) {
  std::vector<Word> r;
  for (const auto &x : v)
    r.push_back(x.word());
  return r;
}

} // namespace

TEST_CASE("lexicographic order") {
  CHECK(lex_compare(w("112"), w("11212")) == Ordering::Less);
  CHECK(lex_compare(w("12122"), w("122")) == Ordering::Less);
  CHECK(lex_compare(w("1212"), w("1212")) == Ordering::Equal);
  CHECK(lex_compare(w("2"), w("1222")) == Ordering::Greater);
  CHECK(lex_compare(Word(), w("1")) == Ordering::Less);
  // operator<=> agrees with lex_compare everywhere
  for (const auto &a : all_words(2, 3))
    for (const auto &b : all_words(2, 4)) {
      Ordering o = lex_compare(a, b);
      CHECK((o == Ordering::Less) == (a < b));
      CHECK((o == Ordering::Equal) == (a == b));
    }
}

TEST_CASE("word parsing and printing") {
  CHECK(to_string(w("1122")) == "1122");
  Word big{1, 12, 2};
  CHECK(to_string(big) == "[1,12,2]");
  CHECK(parse_word("[1,12,2]", Alphabet(12)) == big);
  CHECK_THROWS_AS(parse_word("13", Alphabet(2)), ParseError);
  CHECK_THROWS_AS(parse_word("1a", Alphabet(2)), ParseError);
  CHECK_THROWS_AS(parse_word("[1,", Alphabet(2)), ParseError);
  CHECK(parse_word("", Alphabet(2)).empty());
  CHECK_THROWS(Alphabet(0));
  CHECK(w("11212").count(1) == 3);
}

TEST_CASE("lyndon predicate") {
  CHECK(is_lyndon(w("11212")));
  CHECK_FALSE(is_lyndon(w("21")));
  CHECK_FALSE(is_lyndon(w("11")));
  CHECK_FALSE(is_lyndon(Word()));
  CHECK(is_lyndon(w("1")));
  CHECK_THROWS_AS(LyndonWord{Word()}, EmptyWord);
  CHECK_THROWS(LyndonWord(w("1212")));
  for (std::size_t len = 1; len <= 10; ++len)
    for (const auto &u : all_words(2, len))
      CHECK(is_lyndon(u) == lyndon_by_rotation(u));
  for (std::size_t len = 1; len <= 6; ++len)
    for (const auto &u : all_words(3, len))
      CHECK(is_lyndon(u) == lyndon_by_rotation(u));
}

TEST_CASE("CFL factorization") {
  CHECK(words_of(cfl_factorize(w("21"))) == std::vector<Word>{w("2"), w("1")});
  CHECK(words_of(cfl_factorize(w("1212"))) == std::vector<Word>{w("12"), w("12")});
  CHECK(words_of(cfl_factorize(w("2112"))) == std::vector<Word>{w("2"), w("112")});
  CHECK_THROWS_AS(cfl_factorize(Word()), EmptyWord);
  for (std::size_t len = 1; len <= 12; ++len)
    for (const auto &u : all_words(2, len)) {
      auto f = words_of(cfl_factorize(u));
      Word cat;
      for (const auto &x : f)
        cat += x;
      CHECK(cat == u);
      CHECK(std::is_sorted(f.begin(), f.end(), std::greater<>()));
    }
  // uniqueness against brute force
  for (std::size_t len = 1; len <= 8; ++len)
    for (const auto &u : all_words(2, len)) {
      std::vector<Word> cur;
      std::vector<std::vector<Word>> all;
      all_lyndon_factorizations(u, cur, all);
      REQUIRE(all.size() == 1);
      CHECK(all.front() == words_of(cfl_factorize(u)));
    }
}

TEST_CASE("standard factorization") {
  auto st = [](const char *s) {
    auto [b, g] = standard_factorization(LyndonWord(w(s)));
    return std::make_pair(to_string(b.word()), to_string(g.word()));
  };
  CHECK(st("112") == std::make_pair(std::string("1"), std::string("12")));
  CHECK(st("1112") == std::make_pair(std::string("1"), std::string("112")));
  CHECK(st("1122") == std::make_pair(std::string("1"), std::string("122")));
  CHECK(st("11212") == std::make_pair(std::string("112"), std::string("12")));
  CHECK_THROWS_AS(standard_factorization(LyndonWord(w("1"))), NoFactorization);
  for (const auto &lw : lyndon_enumerate(Alphabet(2), 10)) {
    if (lw.size() < 2)
      continue;
    auto [b, g] = standard_factorization(lw);
    CHECK(b.word() + g.word() == lw.word());
    CHECK(b.word() < lw.word());
    CHECK(lw.word() < g.word());
    // gamma is also the longest proper Lyndon suffix
    std::size_t longest = 0;
    for (std::size_t i = 1; i < lw.size(); ++i)
      if (is_lyndon(lw.word().substr(i))) {
        longest = lw.size() - i;
        break;
      }
    CHECK(g.size() == longest);
  }
}

TEST_CASE("lyndon enumeration") {
  auto names = [](const std::vector<LyndonWord> &v) {
    std::string s;
    for (const auto &x : v)
      s += (s.empty() ? "" : " ") + to_string(x.word());
    return s;
  };
  CHECK(names(lyndon_enumerate(Alphabet(2), 2)) == "1 12 2");
  CHECK(names(lyndon_enumerate(Alphabet(2), 4)) == "1 1112 112 1122 12 122 1222 2");
  CHECK(names(lyndon_enumerate(Alphabet(1), 5)) == "1");
  CHECK(lyndon_enumerate(Alphabet(2), 0).empty());
  for (int m : {2, 3}) {
    const int max_len = m == 2 ? 12 : 7;
    auto all = lyndon_enumerate(Alphabet(m), max_len);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (int n = 1; n <= max_len; ++n) {
      long c = std::count_if(all.begin(), all.end(),
                             [n](const LyndonWord &x) { return x.size() == std::size_t(n); });
      CHECK(c == necklace_count(m, n));
    }
  }
}
