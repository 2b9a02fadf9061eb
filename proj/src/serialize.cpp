#include "selfsim/serialize.hpp"

#include "selfsim/errors.hpp"

namespace selfsim {

using nlohmann::json;

json to_json(const DensePoly &f) { return std::vector<Residue>(f.coeffs().begin(), f.coeffs().end()); }

DensePoly poly_from_json(Residue p, const json &j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<Residue> c;
  for (const auto &v : j) {
    if (!v.is_number_integer()) throw ParseError("polynomial coefficient must be an integer");
    c.push_back(fp::reduce(v.get<long long>(), p));
  }
  return DensePoly(p, c);
}

json to_json(const SFraction &a) {
  if (a.is_polynomial()) return to_json(a.num());
  return {{"num", to_json(a.num())}, {"den", std::vector<int>(a.den_exps().begin(), a.den_exps().end())}};
}

SFraction sfraction_from_json(const RingPtr &ring, const json &j) {
  if (j.is_array()) return SFraction(ring, poly_from_json(ring->modulus(), j));
  if (!j.is_object() || !j.contains("num")) throw ParseError("fraction must be an array or {\"num\", \"den\"}");
  std::vector<int> den(ring->size(), 0);
  if (j.contains("den")) {
    den = j.at("den").get<std::vector<int>>();
    if (den.size() != ring->size()) throw ParseError("denominator exponent vector has wrong length");
    for (int e : den)
      if (e < 0) throw ParseError("negative denominator exponent");
  }
  return canonicalize(ring, poly_from_json(ring->modulus(), j.at("num")), Exps(den.begin(), den.end()));
}

json to_json(const MultiLaurent &a) {
  json terms = json::array();
  for (const auto &[e, c] : a.terms()) terms.push_back(json::array({e, c}));
  return terms;
}

MultiLaurent multi_laurent_from_json(Residue p, std::size_t d, const json &j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be an array of [exponents, coefficient]");
  MultiLaurent m(p, d);
  for (const auto &t : j) {
    if (!t.is_array() || t.size() != 2) throw ParseError("Laurent term must be [exponents, coefficient]");
    auto e = t[0].get<Exponents>();
    if (e.size() != d) throw ParseError("Laurent exponent vector has wrong length");
    m.add_term(e, fp::reduce(t[1].get<long long>(), p));
  }
  return m;
}

json to_json(const MultiSFraction &a) {
  json j = {{"terms", to_json(a.num())}};
  if (!a.is_laurent()) j["den"] = a.den_exps();
  return j;
}

MultiSFraction multi_sfraction_from_json(const MultiRingPtr &ring, const json &j) {
  const json &terms = j.is_object() ? j.at("terms") : j;
  std::vector<int> den(ring->d, 0);
  if (j.is_object() && j.contains("den")) {
    den = j.at("den").get<std::vector<int>>();
    if (den.size() != ring->d) throw ParseError("denominator exponent vector has wrong length");
    for (int e : den)
      if (e < 0) throw ParseError("negative denominator exponent");
    if (!ring->localized())
      for (int e : den)
        if (e) throw ParseError("denominators need a localized instance");
  }
  return canonicalize(ring, multi_laurent_from_json(ring->p, ring->d, terms), den);
}

json to_json(const PolyMat &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

PolyMat poly_mat_from_json(Residue p, const json &j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  PolyMat m(n, DensePoly(p));
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw ParseError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = poly_from_json(p, j[i][k]);
  }
  return m;
}

json to_json(const ColumnVec &v) {
  json a = json::array();
  for (const auto &e : v) a.push_back(to_json(e));
  return a;
}

ColumnVec column_from_json(Residue p, const json &j) {
  if (!j.is_array()) throw ParseError("vector must be an array of polynomials");
  ColumnVec v;
  for (const auto &e : j) v.push_back(poly_from_json(p, e));
  return v;
}

} // namespace selfsim
