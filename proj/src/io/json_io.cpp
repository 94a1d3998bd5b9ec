#include "io/json_io.hpp"

#include "ring/error.hpp"

namespace refsev {

Json to_json(const YLaurent& v) {
  Json out = Json::array();
  for (const auto& t : v.terms()) {
    out.push_back(Json::array({t.coeff.get_num().get_str(), t.coeff.get_den().get_str(), t.dexp}));
  }
  return out;
}

YLaurent laurent_from(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kInvalidArgument, "expected a term array");
  std::vector<YLaurent::Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3) {
      fail(ErrorCode::kInvalidArgument, "term must be [num, den, dexp]");
    }
    Rational c = parse_rational(t[0].get<std::string>() + "/" + t[1].get<std::string>());
    terms.push_back({t[2].get<int>(), c});
  }
  return YLaurent::from_terms(std::move(terms));
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  const int stop = s.exact() ? s.stored_end() : s.trunc();
  for (int n = s.lead(); n < stop; ++n) coeffs.push_back(to_json(s.coeff(n)));
  Json out;
  out["offset24"] = s.offset24();
  out["lead"] = s.lead();
  out["trunc"] = s.exact() ? Json() : Json(s.trunc());
  out["coeffs"] = coeffs;
  return out;
}

QSeries qseries_from(const Json& j) {
  const int offset24 = j.at("offset24").get<int>();
  const int lead = j.at("lead").get<int>();
  const int trunc = j.at("trunc").is_null() ? QSeries::kExact : j.at("trunc").get<int>();
  std::vector<YLaurent> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(laurent_from(c));
  if (coeffs.empty()) return QSeries::big_o(trunc, offset24);
  return QSeries::from_coeffs(std::move(coeffs), lead, trunc, offset24);
}

Json to_json(const ParamPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back({{"mono", mono}, {"coeff", to_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

ParamPoly param_poly_from(const Json& j) {
  ParamPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const Json& t : j.at("terms")) {
    auto mono = t.at("mono").get<ParamPoly::Monomial>();
    if (mono.size() != p.vars().size()) {
      fail(ErrorCode::kInvalidArgument, "monomial length does not match the variables");
    }
    p.add_term(mono, laurent_from(t.at("coeff")));
  }
  return p;
}

Json to_json(const NodePolynomial& np) {
  return {{"family", to_string(np.family)},
          {"delta", np.delta},
          {"y", to_string(np.mode)},
          {"Q", to_json(np.q)},
          {"N", to_json(np.n)},
          {"fitted_on", np.fitted_on},
          {"validated_on", np.validated_on},
          {"validated", np.validated},
          {"detail", np.detail}};
}

NodePolynomial node_polynomial_from(const Json& j) {
  NodePolynomial np;
  const auto family = parse_node_family(j.at("family").get<std::string>());
  if (!family) fail(ErrorCode::kInvalidArgument, "unknown node polynomial family");
  const auto mode = parse_ymode(j.at("y").get<std::string>());
  if (!mode) fail(ErrorCode::kInvalidArgument, "unknown y mode");
  np.family = *family;
  np.delta = j.at("delta").get<int>();
  np.mode = *mode;
  np.q = param_poly_from(j.at("Q"));
  np.n = param_poly_from(j.at("N"));
  np.fitted_on = j.at("fitted_on").get<std::vector<std::vector<long>>>();
  np.validated_on = j.at("validated_on").get<std::vector<std::vector<long>>>();
  np.validated = j.at("validated").get<bool>();
  np.detail = j.at("detail").get<std::string>();
  return np;
}

std::string laurent_to_json(const YLaurent& v) { return to_json(v).dump(); }

YLaurent laurent_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("bad JSON: ") + e.what());
  }
  return laurent_from(j);
}

}  // namespace refsev
