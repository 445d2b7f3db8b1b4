#pragma once

#include <string>

#include <json.hpp>

#include "ncbinom/pbw.hpp"

namespace ncb {

// Key order is kept so emitted documents read {"ring", "basis", "terms"}.
using Json = nlohmann::ordered_json;

template <class R> struct CoeffIO;

template <> struct CoeffIO<Rational> {
  static std::string tag(const Rational *) { return "Q"; }
  static std::string text(const Rational &c) { return c.get_str(); }
  static Rational parse(const std::string &s, const std::string &) { return parse_rational(s); }
  static void check_tag(const std::string &t) {
    if (t != "Q")
      throw RingMismatch("expected ring Q, got " + t);
  }
};

template <> struct CoeffIO<QPoly> {
  static std::string tag(const QPoly *) { return "Q[q]"; }
  static std::string text(const QPoly &c) { return c.to_text(); }
  static QPoly parse(const std::string &s, const std::string &) { return parse_qpoly(s); }
  static void check_tag(const std::string &t) {
    if (t != "Q[q]")
      throw RingMismatch("expected ring Q[q], got " + t);
  }
};

template <> struct CoeffIO<PrimeFieldElem> {
  static std::string tag(const PrimeFieldElem *c) {
    return c ? "GF:" + std::to_string(c->modulus()) : "GF";
  }
  static std::string text(const PrimeFieldElem &c) { return std::to_string(c.residue()); }
  static std::int64_t modulus(const std::string &t);
  static PrimeFieldElem parse(const std::string &s, const std::string &t) {
    return PrimeFieldElem::reduce(parse_rational(s), modulus(t));
  }
  static void check_tag(const std::string &t) { modulus(t); }
};

// GF(p) tag "GF:p" -> p; throws RingMismatch otherwise.
std::int64_t parse_field_tag(const std::string &tag);
inline std::int64_t CoeffIO<PrimeFieldElem>::modulus(const std::string &t) {
  return parse_field_tag(t);
}

template <Coefficient R> Json to_json(const FreePoly<R> &f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back(Json{{"coeff", CoeffIO<R>::text(it->second)}, {"word", to_string(it->first)}});
  const R *first = f.is_zero() ? nullptr : &f.terms().begin()->second;
  return Json{{"ring", CoeffIO<R>::tag(first)}, {"basis", "word"}, {"terms", terms}};
}

template <Coefficient R> Json to_json(const PBWPoly<R> &p) {
  Json terms = Json::array();
  for (const auto &[m, c] : p.terms()) {
    Json factors = Json::array();
    for (const auto &[w, t] : m.runs())
      factors.push_back(Json::array({to_string(w), t}));
    terms.push_back(Json{{"coeff", CoeffIO<R>::text(c)}, {"factors", factors}});
  }
  const R *first = p.is_zero() ? nullptr : &p.terms().begin()->second;
  return Json{{"ring", CoeffIO<R>::tag(first)}, {"basis", "pbw"}, {"terms", terms}};
}

namespace detail {

// Parses words against a wide alphabet; the polynomial gets the smallest
// alphabet (at least two letters) that holds them, unless the document names one.
Alphabet document_alphabet(const Json &doc, const std::vector<Word> &words);
Word json_word(const Json &text);
void expect_basis(const Json &doc, const char *basis);
[[noreturn]] void rethrow_json(const std::exception &e);

} // namespace detail

template <Coefficient R> FreePoly<R> freepoly_from_json(const Json &doc) {
  try {
    detail::expect_basis(doc, "word");
    const std::string ring = doc.at("ring").get<std::string>();
    CoeffIO<R>::check_tag(ring);
    std::vector<Word> words;
    std::vector<R> coeffs;
    for (const auto &t : doc.at("terms")) {
      words.push_back(detail::json_word(t.at("word")));
      coeffs.push_back(CoeffIO<R>::parse(t.at("coeff").get<std::string>(), ring));
    }
    FreePoly<R> f(detail::document_alphabet(doc, words));
    for (std::size_t i = 0; i < words.size(); ++i)
      f.add_term(words[i], coeffs[i]);
    return f;
  } catch (const nlohmann::json::exception &e) {
    detail::rethrow_json(e);
  }
}

template <Coefficient R> PBWPoly<R> pbwpoly_from_json(const Json &doc) {
  try {
    detail::expect_basis(doc, "pbw");
    const std::string ring = doc.at("ring").get<std::string>();
    CoeffIO<R>::check_tag(ring);
    std::vector<PBWMonomial> monos;
    std::vector<Word> letters;
    std::vector<R> coeffs;
    for (const auto &t : doc.at("terms")) {
      std::vector<std::pair<Word, int>> runs;
      for (const auto &f : t.at("factors")) {
        Word w = detail::json_word(f.at(0));
        const int e = f.at(1).get<int>();
        if (e < 1)
          throw ParseError("factor exponents must be positive");
        letters.push_back(w);
        runs.emplace_back(std::move(w), e);
      }
      monos.push_back(PBWMonomial::from_runs(runs));
      coeffs.push_back(CoeffIO<R>::parse(t.at("coeff").get<std::string>(), ring));
    }
    PBWPoly<R> p(detail::document_alphabet(doc, letters));
    for (std::size_t i = 0; i < monos.size(); ++i)
      p.add_term(monos[i], coeffs[i]);
    return p;
  } catch (const nlohmann::json::exception &e) {
    detail::rethrow_json(e);
  }
}

Json parse_json(const std::string &text);

} // namespace ncb
