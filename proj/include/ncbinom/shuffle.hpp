#pragma once

#include <string>
#include <vector>

#include "ncbinom/pbw.hpp"

namespace ncb {

// Letter counts of a shuffle type polynomial. counts[x-1] is the number of
// occurrences of letter x; the alphabet has counts.size() letters.
struct MultiDegree {
  std::vector<int> counts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> c);

  // (i, j) with i occurrences of 2 and j occurrences of 1
  static MultiDegree binary(int i, int j) { return MultiDegree({j, i}); }
  // "i_m,...,i_1": highest letter first, as written on the command line
  static MultiDegree parse(const std::string &text);

  int total() const;
  Alphabet alphabet() const { return Alphabet(static_cast<int>(counts.size())); }
  std::string to_string() const; // highest letter first
  bool operator==(const MultiDegree &) const = default;
};

// PBW form of SH of multidegree d: pbw_rewrite of the word-basis recursion.
PBWPolyQ sh_pbw(const MultiDegree &d);
PBWPolyQ sh_pbw(int i, int j);

// Coefficient of E_alpha in SH_{alpha(2), alpha(1)} (and its multinomial analogue),
// from the recursion over the CFL factorization of alpha minus its first letter.
// Throws TheoremViolation on any non-integral step. Memoized.
Integer c_e_alpha(const LyndonWord &alpha);

// (sum |a_k| t_k)! / prod (|a_k|!)^{t_k} t_k!  *  prod C_{E_{a_k}}^{t_k}
Rational coeff_closed_form(const PBWMonomial &m);

// SH of multidegree d assembled purely from coeff_closed_form.
PBWPolyQ sh_closed_form(const MultiDegree &d);

// PBW monomials of total degree d over m letters, as non-increasing
// multisets of Lyndon words; returned in decreasing order.
std::vector<PBWMonomial> pbw_monomials_of_degree(int m, int d);

// (E_1 + ... + E_m)^d from coeff_closed_form alone. With check set, also
// compares against pbw_rewrite of the expanded power (TheoremViolation on mismatch).
PBWPolyQ binomial_ls(int m, int d, bool check = true);

// SH_{k, p-k} reduced mod p; throws TheoremViolation if anything other than a
// single E_alpha with |alpha| = p survives.
PBWPoly<PrimeFieldElem> sh_pbw_char_p(int k, std::int64_t p);

// In char p, kill E_alpha of length p with alpha(kill_letter) >= 2 and return
// what remains of SH_{k, p-k}.
PBWPoly<PrimeFieldElem> sh_char_p_killed(int k, std::int64_t p, Letter kill_letter);

} // namespace ncb
