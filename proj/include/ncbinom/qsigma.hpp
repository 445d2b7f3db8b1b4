#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ncbinom/freepoly.hpp"

namespace ncb {

// Linear operator on Q[q]<X>, kept as an immutable expression tree and
// evaluated on demand.
class Operator {
public:
  enum class Kind {
    Identity,
    Endomorphism,    // multiplicative extension of generator images
    Grading,         // w -> q^{|w|} w
    AdSigma,         // w -> x w - sigma(w) x
    LeftMult,        // w -> f w
    SigmaDerivation, // Leibniz extension of generator images
    Sum,
    Compose, // first operand applied last
    Scale,
  };

  static Operator identity();
  // images[x-1] is the image of letter x. A unit image other than 1 is kept
  // so that apply can reject it.
  static Operator endomorphism(std::vector<FreePolyQq> images, QPoly unit_image = QPoly(1));
  static Operator grading(QPoly q = QPoly::q_power(1));
  static Operator ad_sigma(FreePolyQq x, Operator sigma);
  static Operator left_mult(FreePolyQq f);
  static Operator sigma_derivation(Operator sigma, std::vector<FreePolyQq> images);
  static Operator scaled(QPoly c, Operator op);

  Operator operator+(const Operator &o) const;
  // (*this) after o
  Operator operator*(const Operator &o) const;
  Operator power(unsigned m) const;

  Kind kind() const;
  std::string describe() const;

  // Throws NotUnital when an endomorphism node sends 1 elsewhere.
  FreePolyQq apply(const FreePolyQq &f) const;

private:
  struct Node;
  explicit Operator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

FreePolyQq apply_operator(const Operator &op, const FreePolyQq &f);

// Random-product checks on words of length <= 3 (fixed seed).
// NotUnital if sigma(1) != 1, TheoremViolation if not multiplicative.
void check_endomorphism(const Operator &sigma, const Alphabet &alphabet, std::uint64_t seed = 1);
// NotASigmaDerivation when delta(uv) != delta(u) v + sigma(u) delta(v) on some sample.
void check_sigma_derivation(const Operator &delta, const Operator &sigma, const Alphabet &alphabet,
                            std::uint64_t seed = 2);

// Values of SH_{i,j}(Y, X) applied to f for all i + j <= n, through
// SH_{i,j} = X o SH_{i,j-1} + Y o SH_{i-1,j}. grid[i][j].
template <class T>
std::vector<std::vector<T>> shuffle_operator_grid(int n, const T &f,
                                                  const std::function<T(const T &)> &X,
                                                  const std::function<T(const T &)> &Y) {
  std::vector<std::vector<T>> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    g[i].reserve(static_cast<std::size_t>(n - i) + 1);
    for (int j = 0; i + j <= n; ++j) {
      if (i == 0 && j == 0)
        g[0].push_back(f);
      else if (i == 0)
        g[0].push_back(X(g[0][j - 1]));
      else if (j == 0)
        g[i].push_back(Y(g[i - 1][0]));
      else
        g[i].push_back(X(g[i][j - 1]) + Y(g[i - 1][j]));
    }
  }
  return g;
}

// The standard generators x = letter 1, y = letter 2 over Q[q].
FreePolyQq qx();
FreePolyQq qy();

// SH_{k,j}(ad_sigma x + y, sigma) applied to f (default 1).
FreePolyQq sh_hat_apply(int k, int j, const FreePolyQq &x, const FreePolyQq &y,
                        const Operator &sigma);
FreePolyQq sh_hat_apply(int k, int j, const FreePolyQq &x, const FreePolyQq &y,
                        const Operator &sigma, const FreePolyQq &f);

// (x+y)^n = sum_k SH^_{k,n-k}(1) x^{n-k} with x = 1, y = 2.
bool theorem_b_verify(int n, const Operator &sigma);
// With sigma = id: SH^_{k,n-k}(1) = binom(n,k) (ad x + y)^k(1) for every k.
bool theorem_b_identity_case(int n);

// Nondecreasing tuples 0 <= m_1 <= ... <= m_k <= top.
std::vector<std::vector<int>> nondecreasing_tuples(int k, int top);

// SH^_{k,n-k} = sum D_{m_1}...D_{m_k} sigma^{n-k} on a basket of words of length
// <= 2, and the sigma^{m_1} D_0 sigma^{m_2-m_1} ... D_0 (1) form at 1.
bool d_m_factorization_check(int n, int k, const Operator &sigma);
// sigma^m o (ad_sigma x + y) = (ad_sigma(sigma^m x) + sigma^m y) o sigma^m on the basket.
bool sigma_adjoint_check(int m, const Operator &sigma);

// y^{(j)} = (ad_q x)^j (y)
const FreePolyQq &q_derivative(int j);
// (ad_q x + y)^n (1)
const FreePolyQq &qbell(int n);
// y B_{n-1,k-1,q} + ad_q x(B_{n-1,k,q}); the partials are checked to sum to qbell(n).
const FreePolyQq &qbell_partial(int n, int k);
// sum_{l=k-1}^{n-1} binom(n-1,l)_q B_{l,k-1,q} y^{(n-1-l)}, or with y^{(n-l)} when literal.
FreePolyQq qbell_partial_sum_form(int n, int k, bool literal = false);

// (x+y)^n = sum binom(n,k)_q B_{k,q} x^{n-k}, plus SH^_{k,n-k}(1) = binom(n,k)_q B_{k,q}
// under the grading sigma.
bool binomial_q_verify(int n);

FreePolyQ evaluate_q(const FreePolyQq &f, const Rational &q);
FreePolyQq to_qpoly(const FreePolyQ &f);

// [SH_{k,n-k}(delta + y, sigma)(1)]_k after checking sigma and delta.
std::vector<FreePolyQq> ore_binomial(int n, const Operator &sigma, const Operator &delta);

// sigma = id in the commutative model k[y, dy, d^2y, ...]: the SH coefficients
// against binom(n,k) times the classical Bell sum in the derivatives of y.
bool ore_commutative_check(int n);

} // namespace ncb
