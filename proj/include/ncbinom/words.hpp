#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncbinom/error.hpp"

namespace ncb {

using Letter = std::uint8_t;

// Letters 1..size with 1 < 2 < ... < size.
struct Alphabet {
  int size = 2;

  explicit Alphabet(int m = 2);
  bool contains(Letter x) const { return x >= 1 && x <= size; }
  bool operator==(const Alphabet &) const = default;
};

// A word over an alphabet; the empty word is the algebra unit.
//
// operator<=> is exactly the lexicographic order used throughout: a proper
// left factor is smaller, otherwise the first differing letter decides.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word letter(Letter x) { return Word(std::vector<Letter>{x}); }
  static Word repeat(Letter x, std::size_t times) {
    return Word(std::vector<Letter>(times, x));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter> &letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // alpha(x): number of occurrences of x
  int count(Letter x) const;
  Letter max_letter() const;

  Word operator+(const Word &o) const;
  Word &operator+=(const Word &o);
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  bool operator==(const Word &) const = default;
  std::strong_ordering operator<=>(const Word &) const = default;

private:
  std::vector<Letter> letters_;
};

enum class Ordering { Less, Equal, Greater };

Ordering lex_compare(const Word &a, const Word &b);

// Digit strings ("1122") when every letter is <= 9, otherwise "[1,12,2]".
std::string to_string(const Word &w);
// Accepts both renderings; letters must lie in the alphabet.
Word parse_word(std::string_view text, const Alphabet &alphabet);

bool is_lyndon(const Word &w);

// A nonempty Lyndon word; construction checks the property.
class LyndonWord {
public:
  explicit LyndonWord(Word w);

  const Word &word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  operator const Word &() const { return word_; }

  bool operator==(const LyndonWord &) const = default;
  std::strong_ordering operator<=>(const LyndonWord &) const = default;

private:
  Word word_;
};

// Chen-Fox-Lyndon factorization (Duval), non-increasing factors.
std::vector<LyndonWord> cfl_factorize(const Word &w);

// st(w) = (beta, gamma) with gamma the lexicographically least proper suffix.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord &w);

// All Lyndon words of length <= max_len in increasing lex order.
std::vector<LyndonWord> lyndon_enumerate(const Alphabet &alphabet, std::size_t max_len);

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept;
};

} // namespace ncb
