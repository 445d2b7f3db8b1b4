#include "ncbinom/freepoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace ncb {

void shuffle_words(const Word &u, const Word &v, std::map<Word, Integer> &out) {
  // ua sh vb = (u sh vb)a + (ua sh v)b, empty word is the unit
  if (u.empty()) {
    out[v] += 1;
    return;
  }
  if (v.empty()) {
    out[u] += 1;
    return;
  }
  std::map<Word, Integer> left, right;
  shuffle_words(u.substr(0, u.size() - 1), v, left);
  shuffle_words(u, v.substr(0, v.size() - 1), right);
  const Word a = Word::letter(u[u.size() - 1]);
  const Word b = Word::letter(v[v.size() - 1]);
  for (auto &[w, m] : left)
    out[w + a] += m;
  for (auto &[w, m] : right)
    out[w + b] += m;
}

namespace {

std::mutex sh_mutex;
std::map<std::vector<int>, FreePolyQ> sh_cache;

FreePolyQ multi_recursion_locked(const std::vector<int> &counts) {
  auto it = sh_cache.find(counts);
  if (it != sh_cache.end())
    return it->second;
  const Alphabet alpha(static_cast<int>(counts.size()));
  FreePolyQ r(alpha);
  if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; })) {
    r = FreePolyQ::unit(alpha);
  } else {
    // SH = sum_x E_x * SH(counts with x decremented)
    for (std::size_t x = 0; x < counts.size(); ++x) {
      if (counts[x] == 0)
        continue;
      std::vector<int> lower = counts;
      --lower[x];
      r += FreePolyQ::letter(alpha, static_cast<Letter>(x + 1)) * multi_recursion_locked(lower);
    }
  }
  sh_cache.emplace(counts, r);
  return r;
}

} // namespace

FreePolyQ sh_word_multi_recursion(const std::vector<int> &counts) {
  if (counts.empty())
    throw Error("multidegree needs at least one letter");
  for (int c : counts)
    if (c < 0)
      throw Error("negative multidegree entry");
  std::lock_guard lock(sh_mutex);
  return multi_recursion_locked(counts);
}

FreePolyQ sh_word_multi_shuffle(const std::vector<int> &counts) {
  if (counts.empty())
    throw Error("multidegree needs at least one letter");
  const Alphabet alpha(static_cast<int>(counts.size()));
  FreePolyQ r = FreePolyQ::unit(alpha);
  for (std::size_t x = counts.size(); x-- > 0;)
    r = shuffle_product(r, FreePolyQ::monomial(alpha, Word::repeat(static_cast<Letter>(x + 1),
                                                                   counts[x]),
                                               1));
  return r;
}

FreePolyQ sh_word_recursion(int i, int j) { return sh_word_multi_recursion({j, i}); }

FreePolyQ sh_word_shuffle(int i, int j) { return sh_word_multi_shuffle({j, i}); }

FreePolyQ sh_word_basis(int i, int j) {
  FreePolyQ rec = sh_word_recursion(i, j);
  FreePolyQ shf = sh_word_shuffle(i, j);
  if (!(rec == shf))
    throw TheoremViolation("SH_{" + std::to_string(i) + "," + std::to_string(j) +
                           "}: recursion and shuffle routes disagree");
  return rec;
}

} // namespace ncb
