#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ncbinom/pbw.hpp"
#include "ncbinom/shuffle.hpp"
#include "ncbinom/verify.hpp"

using namespace ncb;

namespace {

struct Criterion {
  int id; // 0 for the overall runtime target
  const char *what;
  double limit_seconds; // 0: no limit
  std::function<std::vector<SuiteResult>()> run;
};

SuiteResult literal_check() {
  SuiteResult r;
  r.name = "SH_(2,3) display";
  r.checks = 1;
  if (to_latex(sh_pbw(2, 3)).find("3E_{11212}+E_{11122}") == std::string::npos)
    r.failures.push_back("SH_(2,3) lacks 3E_{11212}+E_{11122}");
  return r;
}

} // namespace

int main() {
  const std::string golden = default_golden_path();
  const std::vector<Criterion> criteria{
      {1, "stored SH tables for n = 5, 6, 7", 10,
       [&] { return std::vector{verify_sh_tables(golden, 5, 7), literal_check()}; }},
      {2, "closed form equals rewriting, i+j <= 8 and ternary total <= 6", 120,
       [] { return std::vector{verify_closed_form(8, 6)}; }},
      {3, "PBW round trip (500 samples, degree <= 7) and triangularity (degree <= 8)", 0,
       [] { return std::vector{verify_pbw_roundtrip(500, 7, 8)}; }},
      {4, "commutator examples and pairs with |alpha|+|beta| <= 8", 0,
       [] { return std::vector{verify_commutators(8)}; }},
      {5, "Bell polynomials as filtered SH, n <= 7", 0, [] { return std::vector{verify_bell_filter(7)}; }},
      {6, "binomial formulas through Bell polynomials (n <= 7), classical projection (n <= 6)", 0,
       [] { return std::vector{verify_bell_binomial(7, 6)}; }},
      {7, "sigma-binomial formula, n <= 6, sigma in {id, grading}", 0,
       [] { return std::vector{verify_sigma_binomial(6, {SigmaChoice::Identity, SigmaChoice::Grading})}; }},
      {8, "q-Bell binomial formula and q = 1 specialization, n <= 6", 0,
       [] { return std::vector{verify_qbell(6)}; }},
      {9, "q-commutative Bell routes agree with exact divisions, n <= 8", 0,
       [] { return std::vector{verify_qcomm_bell(8)}; }},
      {10, "Blumen closed form (n <= 6), Weyl and Heisenberg-Weyl (d <= 8)", 0,
       [] { return std::vector{verify_blumen_weyl(6, 8)}; }},
      {11, "characteristic p, p in {2, 3, 5, 7}", 0, [] { return std::vector{verify_char_p({2, 3, 5, 7})}; }},
      {12, "Faa di Bruno (m+n <= 10), quantum plane (n <= 8), cyclotomic (2 <= n <= 12)", 0,
       [] { return std::vector{verify_faa(10), verify_qplane(8), verify_cyclotomic(2, 12)}; }},
      {0, "verify all --max-degree 6", 300, [&] { return verify_all(6, golden); }},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception &e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long checks = 0, bad = 0;
    for (const auto &r : results) {
      checks += r.checks;
      bad += long(r.failures.size());
    }
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool ok = error.empty() && bad == 0 && checks > 0 && in_time;
    failed += ok ? 0 : 1;
    std::string limit = c.limit_seconds > 0 ? " limit " + std::to_string(int(c.limit_seconds)) + "s" : "";
    const std::string label = c.id ? "criterion " + std::to_string(c.id) : std::string("runtime");
    std::printf("%-12s: %s  %s  [%ld/%ld checks, tolerance exact, %.2fs%s]\n", label.c_str(), ok ? "PASS" : "FAIL",
                c.what, checks - bad, checks, secs, limit.c_str());
    if (!error.empty())
      std::printf("    error: %s\n", error.c_str());
    if (!in_time)
      std::printf("    over the time limit\n");
    for (const auto &r : results)
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
        std::printf("    %s: %s\n", r.name.c_str(), r.failures[i].c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
