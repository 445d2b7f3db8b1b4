#pragma once

#include <map>
#include <utility>

#include "ncbinom/freepoly.hpp"

namespace ncb {

// With g = letter 1, h = letter 2 and a_k = g h^k:
// g SH_{m,n}(h, g) and sum over i_0 + ... + i_n = m of a_{i_0} ... a_{i_n}.
FreePolyQ faa_di_bruno_lhs(int m, int n);
FreePolyQ faa_di_bruno_rhs(int m, int n);
bool faa_di_bruno_check(int m, int n);

// Normal form h^a g^b, keyed (a, b), in Q[q]<g,h>/(gh - q hg); letter 2 is h.
using QPlanePoly = std::map<std::pair<int, int>, QPoly>;
QPlanePoly qplane_normal_order(const FreePolyQ &f);

// (x+y)^n = sum binom(n,j)_q y^{n-j} x^j with xy = q yx (x = 1, y = 2).
bool qplane_binomial_check(int n);

// Phi_n divides binom(n,i)_q for 1 <= i <= n-1, and SH_{i,n-i}(h,g) normal-orders
// to binom(n,i)_q h^i g^{n-i} in the quantum plane.
bool qbinom_cyclotomic_vanish(int n);

} // namespace ncb
