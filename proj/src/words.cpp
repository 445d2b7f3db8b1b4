#include "ncbinom/words.hpp"

#include <algorithm>
#include <cctype>

namespace ncb {

Alphabet::Alphabet(int m) : size(m) {
  if (m < 1 || m > 255)
    throw Error("alphabet size must be in 1..255, got " + std::to_string(m));
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x < 1 || x > 255)
      throw Error("letter out of range: " + std::to_string(x));
    letters_.push_back(static_cast<Letter>(x));
  }
}

int Word::count(Letter x) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), x));
}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::operator+(const Word &o) const {
  Word r = *this;
  r += o;
  return r;
}

Word &Word::operator+=(const Word &o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Ordering lex_compare(const Word &a, const Word &b) {
  // proper left factor first, then the first differing letter
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i])
      return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  if (a.size() == b.size())
    return Ordering::Equal;
  return a.size() < b.size() ? Ordering::Less : Ordering::Greater;
}

std::string to_string(const Word &w) {
  if (w.max_letter() <= 9) {
    std::string s;
    for (Letter x : w)
      s += static_cast<char>('0' + x);
    return s;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Word parse_word(std::string_view text, const Alphabet &alphabet) {
  std::vector<Letter> letters;
  auto push = [&](int x) {
    if (x < 1 || x > alphabet.size)
      throw ParseError("letter " + std::to_string(x) + " not in alphabet of size " +
                       std::to_string(alphabet.size));
    letters.push_back(static_cast<Letter>(x));
  };
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw ParseError("unterminated word '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                                              : comma - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad letter '" + std::string(tok) + "'");
      push(std::stoi(std::string(tok)));
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    return Word(std::move(letters));
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad word '" + std::string(text) + "'");
    push(c - '0');
  }
  return Word(std::move(letters));
}

bool is_lyndon(const Word &w) {
  if (w.empty())
    return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    // compare w with its suffix starting at i without materialising it
    bool decided = false;
    for (std::size_t j = 0; i + j < w.size(); ++j) {
      if (w[j] != w[i + j]) {
        if (w[j] > w[i + j])
          return false;
        decided = true;
        break;
      }
    }
    // suffix is a proper left factor of w, hence smaller
    if (!decided)
      return false;
  }
  return true;
}

LyndonWord::LyndonWord(Word w) : word_(std::move(w)) {
  if (word_.empty())
    throw EmptyWord("the empty word is not Lyndon");
  if (!is_lyndon(word_))
    throw Error(to_string(word_) + " is not a Lyndon word");
}

std::vector<LyndonWord> cfl_factorize(const Word &w) {
  if (w.empty())
    throw EmptyWord("cannot factorize the empty word");
  std::vector<LyndonWord> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.substr(i, j - k));
      i += j - k;
    }
  }
  return out;
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord &lw) {
  const Word &w = lw.word();
  if (w.size() < 2)
    throw NoFactorization(to_string(w) + " is a letter");
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i)
    if (w.substr(i) < w.substr(best))
      best = i;
  return {LyndonWord(w.substr(0, best)), LyndonWord(w.substr(best))};
}

std::vector<LyndonWord> lyndon_enumerate(const Alphabet &alphabet, std::size_t max_len) {
  std::vector<LyndonWord> out;
  if (max_len == 0)
    return out;
  const int m = alphabet.size;
  // Duval's successor: extend periodically to max_len, strip trailing maximal
  // letters, increment the last letter.
  std::vector<Letter> w{1};
  while (!w.empty()) {
    out.emplace_back(Word(w));
    const std::size_t len = w.size();
    while (w.size() < max_len)
      w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == m)
      w.pop_back();
    if (!w.empty())
      ++w.back();
  }
  return out;
}

std::size_t WordHash::operator()(const Word &w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

} // namespace ncb
