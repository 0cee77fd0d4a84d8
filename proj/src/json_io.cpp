#include "assoc/json_io.hpp"

#include "assoc/chordalg.hpp"

#include <stdexcept>

namespace assoc {

Json series_to_json(const Series& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms())
    terms.push_back(Json{{"word", word_to_string(*s.alphabet(), w)}, {"coeff", to_string(c)}});
  return Json{{"alphabet", s.alphabet()->names()}, {"truncation", s.truncation()}, {"terms", std::move(terms)}};
}

namespace {

AlphabetPtr shared_alphabet(std::vector<std::string> names) {
  if (names == uf2_alphabet()->names()) return uf2_alphabet();
  if (names == free3_alphabet()->names()) return free3_alphabet();
  for (int n = 2; n <= kMaxStrands; ++n)
    if (names == chord_alphabet(n)->names()) return chord_alphabet(n);
  return make_alphabet(std::move(names));
}

}  // namespace

Series series_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("series JSON must be an object");
    const auto& names = j.at("alphabet");
    const auto& trunc = j.at("truncation");
    const auto& terms = j.at("terms");
    if (!names.is_array() || !trunc.is_number_integer() || !terms.is_array())
      throw std::invalid_argument("series JSON has fields of the wrong type");
    std::vector<std::string> list;
    for (const auto& n : names) list.push_back(n.get<std::string>());
    const int m = trunc.get<int>();
    if (m < 0) throw std::invalid_argument("negative truncation");
    Series s(shared_alphabet(std::move(list)), m);
    for (const auto& t : terms) {
      Word w = parse_word(*s.alphabet(), t.at("word").get<std::string>());
      if (static_cast<int>(w.degree()) > m) throw std::invalid_argument("term above the truncation");
      if (!is_zero(s.coefficient(w))) throw std::invalid_argument("duplicate word in series JSON");
      s.add_term(w, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
}

Series series_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return series_from_json(j);
}

Json equation_report_to_json(const EquationReport& r) {
  Json out = Json::array();
  for (const auto& [name, res] : r.residuals) {
    Json degrees = Json::object();
    for (int d : nonzero_degrees(res)) degrees[std::to_string(d)] = "nonzero";
    out.push_back(Json{{"equation", name}, {"satisfied_through", satisfied_through(res)}, {"residual_degrees", std::move(degrees)}});
  }
  return out;
}

Json associator_report_to_json(const AssociatorReport& r) {
  Json out{{"holds", r.holds()},
           {"satisfied_through", r.equations.satisfied_through},
           {"equations", equation_report_to_json(r.equations)},
           {"grouplike", r.grouplike},
           {"c2", to_string(r.c2)},
           {"abelianization_trivial", r.abelianization_trivial}};
  if (!r.equations.violations.empty()) out["violations"] = r.equations.violations;
  return out;
}

Json dims_to_json(int strands, const std::vector<std::size_t>& dims) {
  return Json{{"strands", strands}, {"dims", dims}};
}

Json gauge_record_to_json(const GaugeRecord& g) {
  Json zeroed = Json::array();
  for (const auto& w : g.zeroed) zeroed.push_back(word_to_string(*uf2_alphabet(), w));
  return Json{{"degree", g.degree},     {"unknowns", g.unknowns}, {"equations", g.equations},
              {"rank", g.rank},         {"nullity", g.nullity},   {"zeroed", std::move(zeroed)}};
}

}  // namespace assoc
