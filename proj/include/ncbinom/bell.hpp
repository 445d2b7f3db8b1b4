#pragma once

#include "ncbinom/shuffle.hpp"

namespace ncb {

// Which letters play x and y in a Bell recursion. The dual polynomials are
// evaluated with swapped arguments in the shuffle comparison, so the roles are
// always spelled out.
struct BellRoles {
  Letter x = 1;
  Letter y = 2;
  int alphabet_size = 2;

  static BellRoles standard() { return {1, 2, 2}; }
  // B*_{n,k}(E_2, E_1): x = E_2, y = E_1
  static BellRoles swapped() { return {2, 1, 2}; }
};

struct BellEntry {
  FreePolyQ word;
  PBWPolyQ pbw;
};

// B_{n,k} = y B_{n-1,k-1} + [x, B_{n-1,k}], B_{0,0} = 1, zero for k = 0 < n or k > n.
const FreePolyQ &bell_partial_word(int n, int k, const BellRoles &roles = BellRoles::standard());
BellEntry bell_partial(int n, int k);
// B_n = (ad x + y)^n (1)
FreePolyQ bell_word(int n, const BellRoles &roles = BellRoles::standard());

// B*_{n,k} = [B*_{n-1,k}, x] + B*_{n-1,k-1} y, homogeneous of y-degree k.
const FreePolyQ &bell_dual_word(int n, int k, const BellRoles &roles = BellRoles::swapped());
PBWPolyQ bell_dual(int n, int k, const BellRoles &roles = BellRoles::swapped());
FreePolyQ bell_dual_total_word(int n, const BellRoles &roles);

// sum_k binom(n,k) B_k x^{n-k} and sum_k binom(n,k) x^{n-k} B*_k with x = 1, y = 2.
FreePolyQ binomial_via_bell(int n);
FreePolyQ binomial_via_bell_dual(int n);

enum class FilterSide { RightmostNotE1, LeftmostNotE2 };

// SH in PBW form with the terms ending in E_1 (or starting with E_2) dropped.
PBWPolyQ sh_filter(const MultiDegree &d, FilterSide side);

// B_{n,k}(E_1, E_2) assembled from the closed-form coefficients of the
// monomials without an E_1 factor; checked against pbw_rewrite(bell_partial).
PBWPolyQ bell_ls_form(int n, int k);

// B_{n,k}(E_1, E_2 + ... + E_m) from closed-form coefficients, checked against
// the rewritten recursion.
PBWPolyQ bell_ls_form_multi(int m, int n, int k);

// B_n in PBW form with every monomial containing E_alpha, alpha(2) >= 2, killed;
// checked against the classical Bell polynomial with y^{(j)} -> E_{1..12}.
PBWPolyQ classical_bell_project(int n);
// The classical formula itself under that substitution.
PBWPolyQ classical_bell_formula(int n);

} // namespace ncb
