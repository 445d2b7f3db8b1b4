#include <sys/resource.h>

#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "CLI11.hpp"
#include "ncbinom/bell.hpp"
#include "ncbinom/io.hpp"
#include "ncbinom/qsigma.hpp"
#include "ncbinom/quotients.hpp"
#include "ncbinom/shuffle.hpp"
#include "ncbinom/verify.hpp"

using namespace ncb;

namespace {

enum class Format { Text, Latex, Json };

struct Ring {
  enum Kind { Q, GF, Qq } kind = Q;
  std::int64_t p = 0;
  std::string tag = "Q";
};

Ring parse_ring(const std::string &s) {
  if (s == "Q")
    return {};
  if (s == "Q[q]")
    return {Ring::Qq, 0, s};
  return {Ring::GF, parse_field_tag(s), s};
}

struct Settings {
  std::string format = "text";
  std::string ring;
  int max_degree = 10;
  long memory_mb = 8192;

  Format fmt() const {
    return format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  }
  // Results with rational coefficients can be shown over any ring.
  Ring rational_ring() const { return parse_ring(ring.empty() ? "Q" : ring); }
  // Results that genuinely live in Q[q].
  void require_qq(const char *what) const {
    if (!ring.empty() && ring != "Q[q]")
      throw UnsupportedRing(std::string(what) + " is computed over Q[q]; got --ring " + ring);
  }
  void check_degree(int d) const {
    if (d < 0)
      throw ParseError("degrees must be nonnegative");
    if (d > max_degree)
      throw ParseError("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(max_degree) +
                       " (raise it with --max-degree)");
  }
};

Settings S;

template <class P> void print_poly(const P &p, const std::string &ring_tag) {
  switch (S.fmt()) {
  case Format::Text:
    std::cout << to_text(p) << "\n";
    break;
  case Format::Latex:
    std::cout << to_latex(p) << "\n";
    break;
  case Format::Json: {
    Json j = to_json(p);
    j["ring"] = ring_tag;
    std::cout << j.dump() << "\n";
  }
  }
}

template <template <class> class Poly> void emit_rational(const Poly<Rational> &p) {
  const Ring r = S.rational_ring();
  switch (r.kind) {
  case Ring::Q:
    print_poly(p, r.tag);
    break;
  case Ring::GF:
    print_poly(p.map_coefficients([&](const Rational &c) { return PrimeFieldElem::reduce(c, r.p); }), r.tag);
    break;
  case Ring::Qq:
    print_poly(p.map_coefficients([](const Rational &c) { return QPoly(c); }), r.tag);
  }
}

void emit(const PBWPolyQ &p) { emit_rational<PBWPoly>(p); }
void emit(const FreePolyQ &f) { emit_rational<FreePoly>(f); }
void emit_qq(const FreePolyQq &f) { print_poly(f, "Q[q]"); }

std::string join(const std::vector<std::string> &v, const char *sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

std::string power_text(const std::string &base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string power_latex(const std::string &base, int e, bool wrap = false) {
  if (e == 1)
    return base;
  return (wrap ? "(" + base + ")" : base) + "^{" + std::to_string(e) + "}";
}

// Sparse Q[q]-combinations of commuting-looking monomials (normal-ordered
// quotient results), printed with caller-supplied monomial renderers.
struct NamedTerm {
  QPoly coeff;
  std::vector<int> exponents;
  std::string text, latex;
};

void emit_named(const std::vector<NamedTerm> &terms, const std::string &basis,
                const std::vector<std::string> &variables) {
  if (S.fmt() == Format::Json) {
    Json t = Json::array();
    for (const auto &n : terms)
      t.push_back(Json{{"coeff", n.coeff.to_text()}, {"exponents", n.exponents}});
    std::cout << Json{{"ring", "Q[q]"}, {"basis", basis}, {"variables", variables}, {"terms", t}}.dump() << "\n";
    return;
  }
  if (terms.empty()) {
    std::cout << "0\n";
    return;
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto &n = terms[i];
    const bool one = n.coeff == QPoly(1);
    const bool atomic = n.coeff.degree() <= 0;
    if (S.fmt() == Format::Text) {
      std::string c = atomic ? n.coeff.to_text() : "(" + n.coeff.to_text() + ")";
      out += (i ? " + " : "") + (n.text.empty() ? c : (one ? n.text : c + "*" + n.text));
    } else {
      std::string c = atomic ? n.coeff.to_latex() : "(" + n.coeff.to_latex() + ")";
      if (i && c[0] != '-')
        out += "+";
      out += n.latex.empty() ? c : (one ? "" : c) + n.latex;
    }
  }
  std::cout << out << "\n";
}

NamedTerm blumen_term(const YHX &e, const QPoly &c) {
  NamedTerm t{c, {e[0], e[1], e[2]}, "", ""};
  const char *names[] = {"y", "h", "x"};
  std::vector<std::string> tx;
  for (int i = 0; i < 3; ++i)
    if (e[i] > 0) {
      tx.push_back(power_text(names[i], e[i]));
      t.latex += power_latex(names[i], e[i]);
    }
  t.text = join(tx, "*");
  return t;
}

// d_i = y^{(i-1)}
NamedTerm qcomm_term(const QCommMonomial &m, const QPoly &c) {
  NamedTerm t{c, m, "", ""};
  std::vector<std::string> tx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) {
      tx.push_back(power_text("d" + std::to_string(i + 1), m[i]));
      t.latex += i == 0 ? power_latex("y", m[i]) : power_latex("y^{(" + std::to_string(i) + ")}", m[i], true);
    }
  t.text = join(tx, "*");
  return t;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

FreePolyQq qq_image(const Json &doc) {
  const std::string ring = doc.at("ring").get<std::string>();
  FreePolyQq f = ring == "Q" ? to_qpoly(freepoly_from_json<Rational>(doc)) : freepoly_from_json<QPoly>(doc);
  if (!(f.alphabet() == Alphabet(2)))
    throw AlphabetMismatch("images must use the letters 1 and 2");
  return f;
}

// {"1": <word-basis document>, "2": ...}; letters left out map to themselves
// for sigma and to zero for delta.
std::vector<FreePolyQq> read_images(const std::string &path, bool identity_default) {
  const Json doc = read_json_file(path);
  std::vector<FreePolyQq> images{identity_default ? qx() : FreePolyQq(Alphabet(2)),
                                 identity_default ? qy() : FreePolyQq(Alphabet(2))};
  try {
    for (const auto &[key, value] : doc.items()) {
      if (key != "1" && key != "2")
        throw ParseError("image keys must be \"1\" or \"2\", got \"" + key + "\"");
      images[key == "1" ? 0 : 1] = qq_image(value);
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(e.what());
  }
  return images;
}

Operator sigma_from_spec(const std::string &spec) {
  if (spec == "id")
    return Operator::identity();
  if (spec == "grading")
    return Operator::grading();
  return Operator::endomorphism(read_images(spec, true));
}

Operator delta_from_spec(const std::string &spec, const Operator &sigma) {
  if (spec == "ad")
    return Operator::ad_sigma(qx(), sigma);
  return Operator::sigma_derivation(sigma, read_images(spec, false));
}

// "sh:i,j[,...]", "binom:m,d", "bell:n,k" or a PBW JSON file.
PBWPolyQ pbw_expression(const std::string &expr) {
  auto ints = [&](const std::string &body) {
    std::vector<int> v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception &) {
        throw ParseError("bad number '" + tok + "' in " + expr);
      }
    return v;
  };
  const auto colon = expr.find(':');
  const std::string head = expr.substr(0, colon == std::string::npos ? 0 : colon);
  const std::string body = colon == std::string::npos ? "" : expr.substr(colon + 1);
  if (head == "sh") {
    MultiDegree d = MultiDegree::parse(body);
    S.check_degree(d.total());
    return sh_pbw(d);
  }
  if (head == "binom" || head == "bell") {
    auto v = ints(body);
    if (v.size() != 2)
      throw ParseError(head + " takes two numbers");
    S.check_degree(head == "binom" ? v[1] : v[0]);
    return head == "binom" ? binomial_ls(v[0], v[1]) : bell_partial(v[0], v[1]).pbw;
  }
  return pbwpoly_from_json<Rational>(read_json_file(expr));
}

void cmd_lyndon(int alphabet, int max_len) {
  if (max_len < 0)
    throw ParseError("--max-len must be nonnegative");
  S.check_degree(max_len);
  std::vector<std::string> words;
  for (const auto &w : lyndon_enumerate(Alphabet(alphabet), std::size_t(max_len)))
    words.push_back(to_string(w.word()));
  if (S.fmt() == Format::Json)
    std::cout << Json{{"alphabet", alphabet}, {"max_len", max_len}, {"words", words}}.dump() << "\n";
  else
    std::cout << join(words) << "\n";
}

void cmd_factorize(const std::string &text, int alphabet) {
  const Word w = parse_word(text, Alphabet(alphabet));
  std::vector<std::string> cfl;
  for (const auto &f : cfl_factorize(w))
    cfl.push_back(to_string(f.word()));
  std::vector<std::string> st;
  if (w.size() > 1 && is_lyndon(w)) {
    auto [b, g] = standard_factorization(LyndonWord(w));
    st = {to_string(b.word()), to_string(g.word())};
  }
  if (S.fmt() == Format::Json) {
    Json j{{"word", to_string(w)}, {"lyndon", !w.empty() && is_lyndon(w)}, {"cfl", cfl}};
    if (!st.empty())
      j["standard"] = st;
    std::cout << j.dump() << "\n";
    return;
  }
  if (S.fmt() == Format::Latex) {
    std::string out;
    for (const auto &f : cfl)
      out += "(" + f + ")";
    std::cout << out << "\n";
  } else {
    std::cout << "cfl: " << join(cfl) << "\n";
  }
  if (!st.empty())
    std::cout << (S.fmt() == Format::Latex ? "(" + st[0] + ", " + st[1] + ")" : "standard: " + join(st)) << "\n";
}

void cmd_sh(const std::string &degree, bool pbw) {
  const MultiDegree d = MultiDegree::parse(degree);
  S.check_degree(d.total());
  if (pbw)
    emit(sh_pbw(d));
  else
    emit(sh_word_multi_recursion(d.counts));
}

void cmd_bell(int n, int k, bool has_k, bool dual, bool words, bool classical) {
  S.check_degree(n);
  if (classical) {
    emit(classical_bell_project(n));
    return;
  }
  const BellRoles roles = dual ? BellRoles::swapped() : BellRoles::standard();
  if (words) {
    if (has_k)
      emit(dual ? bell_dual_word(n, k, roles) : bell_partial_word(n, k, roles));
    else
      emit(dual ? bell_dual_total_word(n, roles) : bell_word(n, roles));
    return;
  }
  if (has_k) {
    emit(dual ? bell_dual(n, k) : bell_partial(n, k).pbw);
    return;
  }
  PBWPolyQ total(Alphabet(2));
  for (int j = 0; j <= n; ++j)
    total += dual ? bell_dual(n, j) : bell_partial(n, j).pbw;
  emit(total);
}

void cmd_qbell(int n, int k, bool has_k) {
  S.require_qq("qbell");
  S.check_degree(n);
  emit_qq(has_k ? qbell_partial(n, k) : qbell(n));
}

void cmd_pbw(const std::vector<std::string> &words, const std::string &input, bool expand) {
  if (expand) {
    if (input.empty())
      throw ParseError("--expand needs --input with a PBW document");
    emit(pbw_expand(pbwpoly_from_json<Rational>(read_json_file(input))));
    return;
  }
  FreePolyQ f(Alphabet(2));
  if (!input.empty())
    f = freepoly_from_json<Rational>(read_json_file(input));
  for (const auto &w : words) {
    Word parsed = parse_word(w, Alphabet(255));
    const int m = std::max<int>(f.alphabet().size, parsed.empty() ? 1 : parsed.max_letter());
    f = f.widen(Alphabet(m));
    f.add_term(parsed, 1);
  }
  if (f.is_zero() && words.empty() && input.empty())
    throw ParseError("pbw needs words or --input");
  emit(pbw_rewrite(f));
}

void cmd_weyl(int d) {
  S.check_degree(d);
  PBWPolyQ p(Alphabet(2));
  const Word two{2}, one2{1, 2}, one{1};
  for (const auto &[e, c] : weyl_binomial(d)) {
    std::vector<std::pair<Word, int>> runs;
    if (e[0])
      runs.emplace_back(two, e[0]);
    if (e[1])
      runs.emplace_back(one2, e[1]);
    if (e[2])
      runs.emplace_back(one, e[2]);
    p.add_term(PBWMonomial::from_runs(runs), c);
  }
  emit(p);
}

void cmd_blumen(int n) {
  S.require_qq("blumen");
  S.check_degree(n);
  std::vector<NamedTerm> terms;
  const auto b = blumen_binomial(n);
  for (auto it = b.rbegin(); it != b.rend(); ++it)
    terms.push_back(blumen_term(it->first, it->second));
  emit_named(terms, "normal-order", {"y", "h", "x"});
}

void cmd_qcomm_bell(int n, int k, bool has_k) {
  S.require_qq("qcomm-bell");
  S.check_degree(n);
  std::vector<NamedTerm> terms;
  for (const auto &[m, c] : has_k ? qcomm_bell(n, k) : qcomm_bell_total(n))
    terms.push_back(qcomm_term(m, c));
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    vars.push_back("d" + std::to_string(i));
  emit_named(terms, "qcomm", vars);
}

void cmd_kill(const std::string &set, const std::string &expr) {
  const KillSet ks = KillSet::parse(set);
  emit(kill_project(pbw_expression(expr), ks));
}

void cmd_ore(int n, const std::string &sigma_spec, const std::string &delta_spec) {
  S.require_qq("ore");
  S.check_degree(n);
  const Operator sigma = sigma_from_spec(sigma_spec);
  const Operator delta = delta_from_spec(delta_spec, sigma);
  const auto coeffs = ore_binomial(n, sigma, delta);
  if (S.fmt() == Format::Json) {
    Json arr = Json::array();
    for (const auto &c : coeffs)
      arr.push_back(to_json(c));
    std::cout << Json{{"n", n}, {"coefficients", arr}}.dump() << "\n";
    return;
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    std::cout << "k=" << k << ": " << (S.fmt() == Format::Latex ? to_latex(coeffs[k]) : to_text(coeffs[k]))
              << "\n";
}

int report(const std::vector<SuiteResult> &results) {
  int failed = 0;
  for (const auto &r : results)
    failed += r.pass() ? 0 : 1;
  if (S.fmt() == Format::Json) {
    Json arr = Json::array();
    for (const auto &r : results)
      arr.push_back(Json{{"suite", r.name},
                         {"pass", r.pass()},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"notes", r.notes},
                         {"seconds", r.seconds}});
    std::cout << Json{{"suites", arr}, {"failed", failed}}.dump() << "\n";
  } else {
    for (const auto &r : results) {
      std::printf("%-60s %8.2fs\n", r.summary().c_str(), r.seconds);
      for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
        std::cout << "    failed: " << r.failures[i] << "\n";
      if (r.failures.size() > 10)
        std::cout << "    ... " << r.failures.size() - 10 << " more\n";
      for (const auto &n : r.notes)
        std::cout << "    note: " << n << "\n";
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " suites passed\n";
  }
  return failed ? 1 : 0;
}

void set_memory_guard() {
#if !defined(__SANITIZE_ADDRESS__)
  if (S.memory_mb <= 0)
    return;
  rlimit lim{};
  lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(S.memory_mb) * 1024 * 1024;
  setrlimit(RLIMIT_AS, &lim);
#endif
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Noncommutative binomial formulas: shuffle type polynomials, Lyndon-Shirshov PBW forms, "
               "Bell and q-Bell polynomials"};
  app.require_subcommand(1);
  app.add_option("--format", S.format, "text, latex or json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--ring", S.ring, "Q, Q[q] or GF:p");
  auto *cap = app.add_option("--max-degree", S.max_degree, "degree cap (default 10)");
  app.add_option("--memory-mb", S.memory_mb, "address-space limit, 0 to disable");

  auto sub = [&](const char *name, const char *help) {
    auto *s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  std::function<int()> action;

  int alphabet = 2, max_len = 0;
  auto *lyn = sub("lyndon", "Lyndon words in lexicographic order");
  lyn->add_option("--alphabet", alphabet)->check(CLI::Range(1, 255));
  lyn->add_option("--max-len", max_len)->required();
  lyn->callback([&] { action = [&] { cmd_lyndon(alphabet, max_len); return 0; }; });

  std::string word;
  int fac_alphabet = 9;
  auto *fac = sub("factorize", "CFL and standard factorizations of a word");
  fac->add_option("word", word)->required();
  fac->add_option("--alphabet", fac_alphabet)->check(CLI::Range(1, 255));
  fac->callback([&] { action = [&] { cmd_factorize(word, fac_alphabet); return 0; }; });

  std::string degree;
  bool pbw_form = false;
  auto *sh = sub("sh", "shuffle type polynomial of a multidegree");
  sh->add_option("--degree", degree, "i_m,...,i_1, highest letter first")->required();
  sh->add_flag("--pbw", pbw_form, "Lyndon-Shirshov PBW form instead of words");
  sh->callback([&] { action = [&] { cmd_sh(degree, pbw_form); return 0; }; });

  int binom_m = 2, binom_d = 0;
  auto *bin = sub("binom", "(E_1 + ... + E_m)^d in PBW form");
  bin->add_option("--alphabet", binom_m)->check(CLI::Range(1, 255));
  bin->add_option("--degree", binom_d)->required();
  bin->callback([&] {
    action = [&] {
      S.check_degree(binom_d);
      emit(binomial_ls(binom_m, binom_d));
      return 0;
    };
  });

  std::vector<std::string> pbw_words;
  std::string pbw_input;
  bool pbw_expand_flag = false;
  auto *pbw = sub("pbw", "rewrite words (or a word-basis document) in PBW coordinates");
  pbw->add_option("words", pbw_words);
  pbw->add_option("--input", pbw_input, "JSON document");
  pbw->add_flag("--expand", pbw_expand_flag, "expand a PBW document back into words");
  pbw->callback([&] { action = [&] { cmd_pbw(pbw_words, pbw_input, pbw_expand_flag); return 0; }; });

  int n = 0, k = 0;
  bool dual = false, words = false, classical = false;
  auto *bell = sub("bell", "Bell differential polynomials");
  bell->add_option("--n", n)->required();
  auto *bell_k = bell->add_option("--k", k);
  bell->add_flag("--dual", dual);
  bell->add_flag("--words", words, "word basis instead of PBW form");
  bell->add_flag("--classical", classical, "projection killing E_alpha with alpha(2) >= 2");
  bell->callback([&] { action = [&] { cmd_bell(n, k, bell_k->count() > 0, dual, words, classical); return 0; }; });

  auto *qb = sub("qbell", "q-Bell differential polynomials over Q[q]");
  qb->add_option("--n", n)->required();
  auto *qb_k = qb->add_option("--k", k);
  qb->callback([&] { action = [&] { cmd_qbell(n, k, qb_k->count() > 0); return 0; }; });

  auto *quot = sub("quotient", "expansions in quotient algebras");
  quot->require_subcommand(1);
  auto qsub = [&](const char *name, const char *help) {
    auto *s = quot->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto *weyl = qsub("weyl", "(E_1 + E_2)^d modulo E_112 = E_122 = 0");
  weyl->add_option("--d", n)->required();
  weyl->callback([&] { action = [&] { cmd_weyl(n); return 0; }; });
  auto *blumen = qsub("blumen", "(x + y)^n with xy = q yx + h, xh = q^2 hx, hy = q^2 yh");
  blumen->add_option("--n", n)->required();
  blumen->callback([&] { action = [&] { cmd_blumen(n); return 0; }; });
  auto *qcb = qsub("qcomm-bell", "q-Bell polynomials with d_v d_u = q^v d_u d_v");
  qcb->add_option("--n", n)->required();
  auto *qcb_k = qcb->add_option("--k", k);
  qcb->callback([&] { action = [&] { cmd_qcomm_bell(n, k, qcb_k->count() > 0); return 0; }; });
  std::string kill_set, kill_expr;
  auto *kill = qsub("kill", "drop PBW terms with a killed factor");
  kill->add_option("--set", kill_set, "comma-separated Lyndon words")->required();
  kill->add_option("--expr", kill_expr, "sh:i,j | binom:m,d | bell:n,k | PBW JSON file")->required();
  kill->callback([&] { action = [&] { cmd_kill(kill_set, kill_expr); return 0; }; });

  std::string sigma_spec = "id", delta_spec = "ad";
  auto *ore = sub("ore", "binomial coefficients in an Ore extension");
  ore->add_option("--n", n)->required();
  ore->add_option("--sigma-spec", sigma_spec, "id, grading or a JSON file of generator images");
  ore->add_option("--delta-spec", delta_spec, "ad or a JSON file of generator images");
  ore->callback([&] { action = [&] { cmd_ore(n, sigma_spec, delta_spec); return 0; }; });

  auto *ver = sub("verify", "identity suites");
  ver->require_subcommand(1);
  std::string golden = default_golden_path();
  ver->add_option("--golden", golden, "stored SH tables");
  auto vsub = [&](const char *name, const char *help) {
    auto *s = ver->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  vsub("all", "every suite, scaled to --max-degree (default 6)")->callback([&] {
    action = [&] { return report(verify_all(cap->count() ? S.max_degree : 6, golden)); };
  });
  vsub("appendix", "stored SH tables, bit-exact")->callback([&] {
    action = [&] { return report({verify_sh_tables(golden)}); };
  });
  std::string sigma_choice = "id";
  auto *vb = vsub("theorem-b", "binomial formula with a sigma-derivation");
  vb->add_option("--n", n)->required();
  vb->add_option("--sigma", sigma_choice)->check(CLI::IsMember({"id", "grading"}));
  vb->callback([&] {
    action = [&] {
      S.check_degree(n);
      return report({verify_sigma_binomial(n, {parse_sigma_choice(sigma_choice)})});
    };
  });
  int faa_max = 10;
  vsub("faa", "noncommutative Faa di Bruno relation, m + n <= max")->add_option("--max", faa_max);
  ver->get_subcommand("faa")->callback([&] { action = [&] { return report({verify_faa(faa_max)}); }; });
  int cyc_n = 12;
  vsub("cyclotomic", "cyclotomic divisibility of q-binomials, 2..n")->add_option("--n", cyc_n);
  ver->get_subcommand("cyclotomic")->callback([&] {
    action = [&] { return report({verify_cyclotomic(2, cyc_n)}); };
  });
  int deg = 6;
  struct Simple {
    const char *name;
    const char *help;
    std::function<SuiteResult(int)> run;
  };
  const std::vector<Simple> simple{
      {"closed-form", "closed form against rewriting", [](int d) { return verify_closed_form(d, std::min(d, 6)); }},
      {"pbw-roundtrip", "rewrite/expand round trip", [](int d) { return verify_pbw_roundtrip(500, std::min(d, 7), d); }},
      {"commutator", "commutators of basis elements", [](int d) { return verify_commutators(d); }},
      {"bell-filter", "Bell polynomials as filtered SH", [](int d) { return verify_bell_filter(d); }},
      {"bell-binomial", "binomial formulas through Bell polynomials", [](int d) { return verify_bell_binomial(d, d); }},
      {"qbell", "q-Bell binomial formula", [](int d) { return verify_qbell(d); }},
      {"qcomm-bell", "q-commutative Bell closed form", [](int d) { return verify_qcomm_bell(d); }},
      {"blumen-weyl", "Blumen and Weyl quotients", [](int d) { return verify_blumen_weyl(d, d); }},
      {"char-p", "characteristic p, p in {2,3,5,7}", [](int) { return verify_char_p({2, 3, 5, 7}); }},
      {"q-plane", "q-binomial theorem in the quantum plane", [](int d) { return verify_qplane(d); }},
      {"ore", "Ore extension coefficients", [](int d) { return verify_ore(d); }},
  };
  for (const auto &s : simple) {
    auto *c = vsub(s.name, s.help);
    c->add_option("--degree", deg, "degree bound (default 6)");
    c->callback([&, run = s.run] {
      action = [&, run] {
        S.check_degree(deg);
        return report({run(deg)});
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  set_memory_guard();

  try {
    S.rational_ring(); // reject a malformed --ring before any work
    return action ? action() : 2;
  } catch (const TheoremViolation &e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc &) {
    std::cerr << "memory guard: allocation limit of " << S.memory_mb << " MB reached\n";
    return 3;
  }
}
