#include "qlie/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace qlie {

Json laurent_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [exp, c] : p.terms()) j[std::to_string(exp)] = to_string(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("laurent: expected object");
  LaurentPoly p;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    const long long exp = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument("laurent: bad exponent '" + key + "'");
    p.add_term(exp, rational_from_string(val.get<std::string>()));
  }
  return p;
}

Json basis_to_json(const BasisElement& b) {
  Json j = Json::object();
  j["k"] = kind_name(b.kind());
  if (!b.is_degree_operator()) j["d"] = Json::array({b.degree().d1, b.degree().d2});
  return j;
}

BasisElement basis_from_json(const Json& j) {
  const std::string k = j.at("k").get<std::string>();
  if (k == "D") return BasisElement::d();
  if (k == "D1") return BasisElement::d1();
  if (k == "D2") return BasisElement::d2();
  BasisKind kind;
  if (k == "E") kind = BasisKind::E;
  else if (k == "F") kind = BasisKind::F;
  else if (k == "G") kind = BasisKind::G;
  else if (k == "H") kind = BasisKind::H;
  else throw std::invalid_argument("basis: unknown kind '" + k + "'");
  const auto& d = j.at("d");
  if (!d.is_array() || d.size() != 2)
    throw std::invalid_argument("basis: 'd' must be a pair");
  return BasisElement::at(kind, Degree{d[0].get<int>(), d[1].get<int>()});
}

Json algebra_to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"c", laurent_to_json(c)}, {"b", basis_to_json(b)}});
  return Json{{"terms", std::move(terms)}};
}

AlgebraElement algebra_from_json(const Json& j) {
  AlgebraElement x;
  for (const auto& term : j.at("terms"))
    x.add_term(basis_from_json(term.at("b")), laurent_from_json(term.at("c")));
  return x;
}

Json tensor_to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json factors = Json::array();
    for (const auto& b : key) factors.push_back(basis_to_json(b));
    terms.push_back({{"c", laurent_to_json(c)}, {"f", std::move(factors)}});
  }
  return Json{{"arity", t.arity()}, {"terms", std::move(terms)}};
}

TensorElement tensor_from_json(const Json& j) {
  const int arity = j.at("arity").get<int>();
  TensorElement t(arity);
  for (const auto& term : j.at("terms")) {
    TensorKey key;
    for (const auto& f : term.at("f")) key.push_back(basis_from_json(f));
    t.add_term(key, laurent_from_json(term.at("c")));
  }
  return t;
}

TensorElement load_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("parse error in '" + path + "': " + e.what());
  }
  return tensor_from_json(j);
}

}  // namespace qlie
