#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncb {

// Outcome of one identity suite. A check that throws counts as a failure and
// its message lands in failures.
struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes; // informational, never fatal
  double seconds = 0;

  bool pass() const { return failures.empty(); }
  std::string summary() const;
};

std::string default_golden_path();

// sh_pbw(k, n-k) re-emitted as JSON and compared bit-exactly with the stored
// tables; only tables with n in [min_n, max_n] take part.
SuiteResult verify_sh_tables(const std::string &golden_path, int min_n = 0, int max_n = 1000);

// Closed-form assembly against pbw_rewrite of the shuffle-product SH, all
// multidegrees with i + j <= max_binary over {1,2} and total <= max_ternary over {1,2,3}.
SuiteResult verify_closed_form(int max_binary, int max_ternary);

// Round trip on random PBW polynomials of degree <= max_degree, and leading-word
// triangularity for every monomial of degree <= tri_degree.
SuiteResult verify_pbw_roundtrip(int samples, int max_degree, int tri_degree, std::uint64_t seed = 7);

// Worked examples plus the structural postconditions for all Lyndon pairs
// alpha < beta with |alpha| + |beta| <= max_total. The refined claim is reported as notes.
SuiteResult verify_commutators(int max_total);

SuiteResult verify_bell_filter(int max_n);

// Both binomial forms against (x+y)^n for n <= max_n; classical projection for n <= classical_n.
SuiteResult verify_bell_binomial(int max_n, int classical_n);

enum class SigmaChoice { Identity, Grading };
SigmaChoice parse_sigma_choice(const std::string &text);

// theorem_b_verify for n <= max_n under the chosen sigmas; with sigma = id also
// SH^_{k,n-k}(1) = binom(n,k) B_k and the D_m factorization.
SuiteResult verify_sigma_binomial(int max_n, const std::vector<SigmaChoice> &sigmas);

// The q-binomial identity with q-Bell polynomials, and qbell at q = 1 against bell.
SuiteResult verify_qbell(int max_n);

SuiteResult verify_qcomm_bell(int max_n);

// Blumen rewriting against its closed form for n <= max_blumen, q = 1 against
// Weyl, and Weyl against the Heisenberg-Weyl form for d <= max_weyl.
SuiteResult verify_blumen_weyl(int max_blumen, int max_weyl);

SuiteResult verify_char_p(const std::vector<std::int64_t> &primes);

SuiteResult verify_faa(int max_total);
SuiteResult verify_qplane(int max_n);
SuiteResult verify_cyclotomic(int min_n, int max_n);

// sigma = id Ore coefficients against the commutative Bell model, and the
// ad_sigma x case against SH^ for the grading sigma.
SuiteResult verify_ore(int max_n);

struct NamedSuite {
  std::string name;
  std::function<SuiteResult()> run;
};

// Every suite scaled to the degree cap, sorted by name.
std::vector<NamedSuite> all_suites(int max_degree, const std::string &golden_path);
std::vector<SuiteResult> verify_all(int max_degree, const std::string &golden_path);

} // namespace ncb
