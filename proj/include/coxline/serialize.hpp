#ifndef COXLINE_SERIALIZE_HPP
#define COXLINE_SERIALIZE_HPP

// JSON encodings (nlohmann::ordered_json, so key order is fixed):
//   DivisorClass   {"d": 3, "a": [1, 1, 1]}
//   CoxMonomial    {"l": 1, "s": [...], "e": [...]}
//   form           {"degree": 1, "terms": [{"exps": [1, 0, 0], "coeff": "1"}]}
//   Relation       {"i": 1, "a": "-2", "b": "1"}
//   trace step     {"divisor": 1, "multiplier": <monomial>, "coeff": "p/q"}
// Rationals are strings "p/q" (or "p" when integral). Integers are JSON
// numbers when they fit in 64 bits and decimal strings otherwise.

#include "coxline/coxmono.hpp"
#include "coxline/form.hpp"
#include "coxline/oracle.hpp"
#include "coxline/picard.hpp"
#include "coxline/relations.hpp"

#include <json.hpp>

namespace coxline {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json to_json(const Rational& q) { return Json(q.get_str()); }

inline Json to_json(const DivisorClass& D) {
  Json a = Json::array();
  for (const auto& ai : D.a()) a.push_back(to_json(ai));
  return Json{{"d", to_json(D.d())}, {"a", std::move(a)}};
}

inline Json to_json(const CoxMonomial& m) {
  return Json{{"l", m.lambda}, {"s", m.sigma}, {"e", m.epsilon}};
}

inline Json to_json(const StandardMonomialSet& s) {
  Json ms = Json::array();
  for (const auto& m : s.monomials) ms.push_back(to_json(m));
  return Json{{"degree", to_json(s.degree)}, {"monomials", std::move(ms)}};
}

inline Json to_json(const HomogeneousForm& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  return Json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

inline Json to_json(const Relation& r) {
  return Json{{"i", r.index}, {"a", to_json(r.a)}, {"b", to_json(r.b)}};
}

inline Json to_json(const std::vector<ReductionStep>& trace) {
  Json steps = Json::array();
  for (const auto& s : trace) {
    steps.push_back(Json{{"divisor", s.divisor}, {"multiplier", to_json(s.multiplier)}, {"coeff", to_json(s.coeff)}});
  }
  return steps;
}

inline Json to_json(const GradedPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return terms;
}

inline Json to_json(const PointConfig& cfg) {
  Json t = Json::array();
  for (const auto& ti : cfg.t()) t.push_back(to_json(ti));
  Json q = Json::array();
  for (const auto& qi : cfg.q()) q.push_back(to_json(qi));
  return Json{{"n", cfg.n()}, {"t", std::move(t)}, {"q", std::move(q)}, {"collinear", cfg.collinear()}};
}

inline DivisorClass divisor_from_json(const Json& j) {
  auto integer = [](const Json& v) {
    return v.is_string() ? Integer(v.get<std::string>(), 10) : Integer(v.get<long>());
  };
  std::vector<Integer> a;
  for (const auto& x : j.at("a")) a.push_back(integer(x));
  return {integer(j.at("d")), std::move(a)};
}

inline CoxMonomial monomial_from_json(const Json& j) {
  return {j.at("l").get<Exponent>(), j.at("s").get<std::vector<Exponent>>(), j.at("e").get<std::vector<Exponent>>()};
}

inline Relation relation_from_json(const Json& j) {
  return {j.at("i").get<std::size_t>(), parse_rational(j.at("a").get<std::string>()),
          parse_rational(j.at("b").get<std::string>())};
}

}  // namespace coxline

#endif  // COXLINE_SERIALIZE_HPP
