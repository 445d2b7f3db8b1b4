#include "ncbinom/io.hpp"

#include <algorithm>

namespace ncb {

std::int64_t parse_field_tag(const std::string &tag) {
  if (tag.rfind("GF:", 0) != 0)
    throw RingMismatch("expected a GF:p ring, got " + tag);
  std::int64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoll(tag.substr(3), &used);
    if (used != tag.size() - 3)
      throw ParseError("bad field tag " + tag);
  } catch (const std::logic_error &) {
    throw ParseError("bad field tag " + tag);
  }
  if (!PrimeFieldElem::is_prime(p))
    throw ParseError(std::to_string(p) + " is not prime");
  return p;
}

namespace detail {

Alphabet document_alphabet(const Json &doc, const std::vector<Word> &words) {
  if (doc.contains("alphabet"))
    return Alphabet(doc.at("alphabet").get<int>());
  Letter top = 2;
  for (const auto &w : words)
    if (!w.empty())
      top = std::max(top, w.max_letter());
  return Alphabet(top);
}

Word json_word(const Json &text) {
  return parse_word(text.get<std::string>(), Alphabet(255));
}

void expect_basis(const Json &doc, const char *basis) {
  if (doc.at("basis").get<std::string>() != basis)
    throw ParseError(std::string("expected basis ") + basis);
}

void rethrow_json(const std::exception &e) { throw ParseError(std::string("JSON: ") + e.what()); }

} // namespace detail

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    detail::rethrow_json(e);
  }
}

} // namespace ncb
