#pragma once

#include <concepts>
#include <string>

#include "ncbinom/rings.hpp"

namespace ncb {

// Per-ring hooks the generic polynomial containers need beyond + - * ==.
template <class R> struct CoeffTraits;

template <> struct CoeffTraits<Rational> {
  static bool is_zero(const Rational &c) { return c == 0; }
  static Rational one() { return 1; }
  static std::string text(const Rational &c) { return c.get_str(); }
  static std::string latex(const Rational &c) {
    if (c.get_den() == 1)
      return c.get_num().get_str();
    return (c < 0 ? "-\\frac{" : "\\frac{") + Integer(abs(c.get_num())).get_str() + "}{" +
           c.get_den().get_str() + "}";
  }
  static bool is_one(const Rational &c) { return c == 1; }
  static bool is_minus_one(const Rational &c) { return c == -1; }
  static bool is_atomic(const Rational &) { return true; }
  static const char *ring_tag() { return "Q"; }
};

template <> struct CoeffTraits<QPoly> {
  static bool is_zero(const QPoly &c) { return c.is_zero(); }
  static QPoly one() { return QPoly(1); }
  static std::string text(const QPoly &c) { return c.to_text(); }
  static std::string latex(const QPoly &c) { return c.to_latex(); }
  static bool is_one(const QPoly &c) { return c == QPoly(1); }
  static bool is_minus_one(const QPoly &c) { return c == QPoly(-1); }
  // Constants print bare; anything else gets parenthesised in products.
  static bool is_atomic(const QPoly &c) { return c.degree() <= 0; }
  static const char *ring_tag() { return "Q[q]"; }
};

template <> struct CoeffTraits<PrimeFieldElem> {
  static bool is_zero(const PrimeFieldElem &c) { return c.is_zero(); }
  static std::string text(const PrimeFieldElem &c) { return to_string(c); }
  static std::string latex(const PrimeFieldElem &c) { return to_string(c); }
  static bool is_one(const PrimeFieldElem &c) { return c.residue() == 1; }
  static bool is_minus_one(const PrimeFieldElem &) { return false; }
  static bool is_atomic(const PrimeFieldElem &) { return true; }
  static const char *ring_tag() { return "GF"; }
};

template <class R>
concept Coefficient = requires(const R &a, const R &b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { CoeffTraits<R>::is_zero(a) } -> std::same_as<bool>;
};

inline std::string ring_tag(const PrimeFieldElem &sample) {
  return "GF:" + std::to_string(sample.modulus());
}

} // namespace ncb
