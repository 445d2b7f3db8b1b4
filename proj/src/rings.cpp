#include "ncbinom/rings.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ncb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
    ++start;
  s = s.substr(start);
  if (!s.empty() && s[0] == '+')
    s = s.substr(1);
  if (s.empty())
    throw ParseError("empty rational");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
      throw ParseError("bad rational '" + std::string(text) + "'");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw ParseError("bad rational '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &r) { return r.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------- GF(p)

bool PrimeFieldElem::is_prime(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

PrimeFieldElem::PrimeFieldElem(const Integer &value, std::int64_t modulus)
    : modulus_(modulus) {
  if (!is_prime(modulus))
    throw UnsupportedRing("GF(" + std::to_string(modulus) + "): modulus is not prime");
  Integer r = value % Integer(static_cast<long>(modulus));
  if (r < 0)
    r += static_cast<long>(modulus);
  residue_ = r.get_si();
}

void PrimeFieldElem::check_same_field(const PrimeFieldElem &o) const {
  if (modulus_ != o.modulus_)
    throw RingMismatch("GF(" + std::to_string(modulus_) + ") combined with GF(" +
                       std::to_string(o.modulus_) + ")");
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem &o) const {
  check_same_field(o);
  return PrimeFieldElem(Integer(static_cast<long>(residue_ + o.residue_)), modulus_);
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem &o) const {
  check_same_field(o);
  return PrimeFieldElem(Integer(static_cast<long>(residue_ - o.residue_)), modulus_);
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem &o) const {
  check_same_field(o);
  Integer prod = Integer(static_cast<long>(residue_)) * static_cast<long>(o.residue_);
  return PrimeFieldElem(prod, modulus_);
}

PrimeFieldElem PrimeFieldElem::operator-() const {
  return PrimeFieldElem(Integer(static_cast<long>(-residue_)), modulus_);
}

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (residue_ == 0)
    throw Error("inverse of zero in GF(" + std::to_string(modulus_) + ")");
  Integer inv;
  Integer a(static_cast<long>(residue_)), m(static_cast<long>(modulus_));
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return PrimeFieldElem(inv, modulus_);
}

bool PrimeFieldElem::operator==(const PrimeFieldElem &o) const {
  check_same_field(o);
  return residue_ == o.residue_;
}

PrimeFieldElem PrimeFieldElem::reduce(const Rational &r, std::int64_t modulus) {
  PrimeFieldElem num(r.get_num(), modulus);
  PrimeFieldElem den(r.get_den(), modulus);
  if (den.is_zero())
    throw UnsupportedRing("denominator of " + r.get_str() + " vanishes mod " +
                          std::to_string(modulus));
  return num * den.inverse();
}

std::string to_string(const PrimeFieldElem &x) { return std::to_string(x.residue()); }

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const Rational &c) {
  if (c != 0)
    coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPoly QPoly::q_power(unsigned k, const Rational &c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational QPoly::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

QPoly QPoly::operator+(const QPoly &o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    v[i] += o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly &o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

QPoly QPoly::operator*(const QPoly &o) const {
  if (is_zero() || o.is_zero())
    return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(v));
}

Rational QPoly::evaluate(const Rational &q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + *it;
  return acc;
}

QPoly QPoly::substitute_power(unsigned k) const {
  if (is_zero())
    return {};
  if (k == 0)
    return QPoly(evaluate(1));
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i * k] = coeffs_[i];
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &divisor) const {
  if (divisor.is_zero())
    throw Error("QPoly division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational &lead = divisor.coeffs_.back();
  std::vector<Rational> quot(degree() >= dd ? degree() - dd + 1 : 0);
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0)
      continue;
    Rational c = rem[i] / lead;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly &divisor) const {
  auto [quot, rem] = divmod(divisor);
  if (!rem.is_zero())
    throw DivisionNotExact("(" + to_text() + ") / (" + divisor.to_text() +
                           ") leaves remainder " + rem.to_text());
  return quot;
}

namespace {

std::string monomial_text(unsigned i) {
  if (i == 0)
    return "";
  if (i == 1)
    return "q";
  return "q^" + std::to_string(i);
}

} // namespace

std::string QPoly::to_text() const {
  if (is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (i == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += monomial_text(i);
    else
      out += mag.get_str() + "*" + monomial_text(i);
  }
  return out;
}

std::string QPoly::to_latex() const {
  if (is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string num = mag.get_den() == 1
                          ? mag.get_num().get_str()
                          : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    if (i == 0)
      out += num;
    else {
      if (mag != 1)
        out += num;
      out += i == 1 ? "q" : "q^{" + std::to_string(i) + "}";
    }
  }
  return out;
}

QPoly parse_qpoly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty())
    throw ParseError("empty q-polynomial");
  std::map<unsigned, Rational> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-')
      ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty())
      throw ParseError("dangling sign in '" + s + "'");
    Rational coeff = 1;
    unsigned power = 0;
    auto qpos = term.find('q');
    if (qpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, qpos);
      std::string tail = term.substr(qpos + 1);
      if (!head.empty()) {
        if (head.back() != '*')
          throw ParseError("bad term '" + term + "'");
        coeff = parse_rational(head.substr(0, head.size() - 1));
      }
      if (tail.empty())
        power = 1;
      else if (tail[0] == '^')
        power = static_cast<unsigned>(std::stoul(tail.substr(1)));
      else
        throw ParseError("bad term '" + term + "'");
    }
    acc[power] += sign * coeff;
  }
  std::vector<Rational> v(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (auto &[p, c] : acc)
    v[p] = c;
  return QPoly(std::move(v));
}

QPoly q_integer(unsigned n) {
  return QPoly(std::vector<Rational>(n, Rational(1)));
}

QPoly q_factorial(unsigned n) {
  QPoly r(1);
  for (unsigned i = 2; i <= n; ++i)
    r *= q_integer(i);
  return r;
}

QPoly q_binomial(unsigned n, unsigned k) {
  if (k > n)
    return {};
  // row[k'] holds binom(m, k')_q while m runs up to n
  std::vector<QPoly> row(k + 1);
  row[0] = QPoly(1);
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j)
      row[j] = row[j - 1] + QPoly::q_power(j) * row[j];
  }
  return row[k];
}

QPoly qpoly_exact_div(const QPoly &a, const QPoly &b) { return a.exact_div(b); }

QPoly cyclotomic(unsigned n) {
  if (n == 0)
    throw Error("cyclotomic(0) is undefined");
  QPoly r = QPoly::q_power(n) - QPoly(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0)
      r = r.exact_div(cyclotomic(d));
  return r;
}

} // namespace ncb
