#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "ncbinom/io.hpp"
#include "ncbinom/verify.hpp"

using namespace ncb;

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
  const std::string path = std::string(P_tmpdir) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST_CASE("suites pass at small degree") {
  for (const auto &r : verify_all(4, default_golden_path())) {
    INFO(r.name);
    CHECK(r.pass());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("suites are ordered by name") {
  const auto s = all_suites(3, default_golden_path());
  REQUIRE(s.size() == 15);
  for (std::size_t i = 1; i < s.size(); ++i)
    CHECK(s[i - 1].name < s[i].name);
}

TEST_CASE("stored table comparison") {
  CHECK(verify_sh_tables(default_golden_path(), 5, 7).checks == 21);
  CHECK(verify_sh_tables(default_golden_path(), 2, 2).checks == 3);

  const auto missing = verify_sh_tables("/nonexistent/tables.json");
  CHECK_FALSE(missing.pass());

  // one altered coefficient must be caught
  std::ifstream in(default_golden_path());
  Json doc = Json::parse(in);
  doc["tables"][3]["poly"]["terms"][0]["coeff"] = "2";
  const auto bad = verify_sh_tables(temp_file("ncb_bad_tables.json", doc.dump()));
  CHECK(bad.checks == 33);
  CHECK(bad.failures.size() == 1);

  // reordered terms are not bit-exact
  Json swapped = Json::parse(std::ifstream(default_golden_path()));
  auto &terms = swapped["tables"][8]["poly"]["terms"];
  std::swap(terms[0], terms[1]);
  CHECK(verify_sh_tables(temp_file("ncb_swapped_tables.json", swapped.dump())).failures.size() == 1);

  CHECK_FALSE(verify_sh_tables(temp_file("ncb_garbage.json", "{not json")).pass());
}

TEST_CASE("individual suites") {
  CHECK(verify_closed_form(5, 3).pass());
  CHECK(verify_pbw_roundtrip(40, 5, 5).pass());
  const auto c = verify_commutators(6);
  CHECK(c.pass());
  CHECK(c.notes.size() == 1);
  CHECK(verify_bell_filter(5).pass());
  CHECK(verify_bell_binomial(5, 4).pass());
  CHECK(verify_sigma_binomial(3, {SigmaChoice::Grading}).pass());
  CHECK(verify_qbell(4).pass());
  CHECK(verify_qcomm_bell(5).pass());
  CHECK(verify_blumen_weyl(4, 5).pass());
  CHECK(verify_char_p({2, 3}).pass());
  CHECK(verify_faa(6).pass());
  CHECK(verify_qplane(5).pass());
  CHECK(verify_cyclotomic(2, 8).checks == 7);
  CHECK(verify_ore(3).pass());
}

TEST_CASE("sigma names and summaries") {
  CHECK(parse_sigma_choice("id") == SigmaChoice::Identity);
  CHECK(parse_sigma_choice("grading") == SigmaChoice::Grading);
  CHECK_THROWS_AS(parse_sigma_choice("swap"), ParseError);
  SuiteResult r;
  r.name = "x";
  r.checks = 3;
  CHECK(r.summary() == "PASS x: 3/3 checks");
  r.failures.push_back("bad");
  CHECK(r.summary() == "FAIL x: 2/3 checks");
  CHECK_THROWS(verify_all(-1, default_golden_path()));
}
