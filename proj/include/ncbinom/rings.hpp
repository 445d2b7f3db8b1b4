#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ncbinom/error.hpp"

namespace ncb {

using Integer = mpz_class;
using Rational = mpq_class; // GMP keeps it reduced with a positive denominator

Rational parse_rational(std::string_view text);
std::string to_string(const Rational &r);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Element of GF(p). The modulus travels with the value; combining elements of
// different fields throws RingMismatch.
class PrimeFieldElem {
public:
  PrimeFieldElem(const Integer &value, std::int64_t modulus);

  static bool is_prime(std::int64_t p);

  std::int64_t residue() const { return residue_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElem operator+(const PrimeFieldElem &o) const;
  PrimeFieldElem operator-(const PrimeFieldElem &o) const;
  PrimeFieldElem operator*(const PrimeFieldElem &o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem inverse() const;
  PrimeFieldElem &operator+=(const PrimeFieldElem &o) { return *this = *this + o; }
  PrimeFieldElem &operator-=(const PrimeFieldElem &o) { return *this = *this - o; }
  PrimeFieldElem &operator*=(const PrimeFieldElem &o) { return *this = *this * o; }
  bool operator==(const PrimeFieldElem &o) const;

  // Reduces a rational with denominator prime to p.
  static PrimeFieldElem reduce(const Rational &r, std::int64_t modulus);

private:
  void check_same_field(const PrimeFieldElem &o) const;

  std::int64_t residue_;
  std::int64_t modulus_;
};

std::string to_string(const PrimeFieldElem &x);

// Univariate polynomial in q with rational coefficients, coefficient i at q^i.
class QPoly {
public:
  QPoly() = default;
  QPoly(long c) : QPoly(Rational(c)) {}
  QPoly(const Rational &c);
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly q_power(unsigned k, const Rational &c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  Rational coefficient(unsigned i) const;

  QPoly operator+(const QPoly &o) const;
  QPoly operator-(const QPoly &o) const;
  QPoly operator*(const QPoly &o) const;
  QPoly operator-() const;
  QPoly &operator+=(const QPoly &o) { return *this = *this + o; }
  QPoly &operator-=(const QPoly &o) { return *this = *this - o; }
  QPoly &operator*=(const QPoly &o) { return *this = *this * o; }
  bool operator==(const QPoly &o) const { return coeffs_ == o.coeffs_; }

  Rational evaluate(const Rational &q) const;
  // q -> q^k
  QPoly substitute_power(unsigned k) const;

  // Long division; throws DivisionNotExact on a nonzero remainder.
  QPoly exact_div(const QPoly &divisor) const;
  // Returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly &divisor) const;

  // "1 + q - 1/2*q^3" style; parse_qpoly accepts the same grammar.
  std::string to_text() const;
  std::string to_latex() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

QPoly parse_qpoly(std::string_view text);

// (n)_q = 1 + q + ... + q^{n-1}, (0)_q = 0
QPoly q_integer(unsigned n);
QPoly q_factorial(unsigned n);
// Pascal-type recursion, never division; k > n gives zero.
QPoly q_binomial(unsigned n, unsigned k);
QPoly qpoly_exact_div(const QPoly &a, const QPoly &b);
// n-th cyclotomic polynomial by dividing q^n - 1 by the lower Phi_d.
QPoly cyclotomic(unsigned n);

} // namespace ncb
