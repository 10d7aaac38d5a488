#include "yr/jsonio.hpp"

namespace yr {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational: expected string");
  return Rational(j.get<std::string>());
}

json to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

json to_json(const RationalFunction& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function: expected {num, den}");
  return RationalFunction(polynomial_from_json(j["num"]), polynomial_from_json(j["den"]));
}

json word_to_json(const Word& w) {
  json arr = json::array();
  for (GenKey g : w) arr.push_back(json::array({gen_i(g), gen_j(g), gen_r(g)}));
  return arr;
}

json to_json(const NCPolynomial& p) {
  json arr = json::array();
  for (const auto& [w, c] : p.terms())
    arr.push_back(json{{"coeff", to_json(c)}, {"monomial", word_to_json(w)}});
  return arr;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (int m = 0; m <= s.order(); ++m) coeffs.push_back(to_json(s.coeff(m)));
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const MatrixSeries& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"n", m.dim()}, {"order", m.order()}, {"entries", rows}};
}

WeightsFile weights_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mu"))
    throw std::invalid_argument("weights: expected {n, l, mu}");
  WeightsFile w;
  w.n = j.value("n", 0);
  w.l = j.value("l", 0);
  for (const auto& x : j["mu"]) w.mu.push_back(ratfunc_from_json(x));
  if (w.n == 0) w.n = static_cast<int>(w.mu.size());
  if (static_cast<int>(w.mu.size()) != w.n)
    throw std::invalid_argument("weights: mu size does not match n");
  return w;
}

json to_json(const WeightsFile& w) {
  json mu = json::array();
  for (const auto& f : w.mu) mu.push_back(to_json(f));
  return json{{"n", w.n}, {"l", w.l}, {"mu", mu}};
}

json to_json(const DrinfeldData& d) {
  json polys = json::array();
  for (const auto& p : d.polys) polys.push_back(to_json(p));
  json out{{"polys", polys}};
  if (d.gamma) out["gamma"] = to_json(*d.gamma);
  return out;
}

}  // namespace yr
