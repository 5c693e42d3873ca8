#include <polycert/json_io.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace polycert {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string, got " + j.dump());
}

Json polynomial_to_json(const Polynomial& f) {
  Json arr = Json::array();
  for (int i = 0; i <= f.degree(); ++i) arr.push_back(int_to_json(f.coefficient(i)));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(int_from_json(c));
  return Polynomial(std::move(coeffs));
}

Json polygon_to_json(const NewtonPolygon& polygon) {
  Json out;
  out["prime"] = int_to_json(polygon.prime());
  Json vertices = Json::array();
  for (const ValuationPoint& v : polygon.vertices())
    vertices.push_back(Json::array({v.index, v.val}));
  out["vertices"] = std::move(vertices);
  out["segments"] = segment_vectors_to_json(segment_vectors(polygon));
  return out;
}

Json segment_vectors_to_json(const std::vector<SegmentVector>& system) {
  Json arr = Json::array();
  for (const SegmentVector& s : system) {
    Json item;
    item["dx"] = s.dx;
    item["dy"] = s.dy;
    item["multiplicity"] = s.multiplicity;
    arr.push_back(std::move(item));
  }
  return arr;
}

Json factorization_to_json(const Factorization& fact) {
  Json out;
  out["unit"] = fact.unit;
  Json factors = Json::array();
  for (const Polynomial& g : fact.factors) factors.push_back(polynomial_to_json(g));
  out["factors"] = std::move(factors);
  out["exhaustive"] = fact.exhaustive;
  Json limits;
  limits["max_degree"] = fact.limits.max_degree;
  limits["divisor_cap"] = fact.limits.divisor_cap;
  limits["value_bound"] = int_to_json(fact.limits.value_bound);
  out["limits"] = std::move(limits);
  return out;
}

Json certificate_to_json(const Certificate& cert) {
  Json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  out["criterion"] = cert.criterion;
  if (cert.prime) out["prime"] = int_to_json(*cert.prime);
  if (cert.exponent) out["exponent"] = *cert.exponent;
  if (cert.m) out["m"] = *cert.m;
  if (cert.bound_lhs) out["bound_lhs"] = int_to_json(*cert.bound_lhs);
  if (cert.bound_rhs) out["bound_rhs"] = int_to_json(*cert.bound_rhs);
  out["primality_probabilistic"] = cert.primality_probabilistic;
  Json reports = Json::array();
  for (const HypothesisReport& r : cert.reports) {
    Json item;
    item["name"] = r.name;
    item["holds"] = r.holds;
    item["detail"] = r.detail;
    reports.push_back(std::move(item));
  }
  out["reports"] = std::move(reports);
  if (cert.witness) out["witness"] = factorization_to_json(*cert.witness);
  return out;
}

Json root_set_to_json(const RootSet& roots) {
  Json out;
  Json arr = Json::array();
  for (const std::complex<double>& z : roots.roots)
    arr.push_back(Json::array({z.real(), z.imag()}));
  out["roots"] = std::move(arr);
  out["residuals"] = roots.residuals;
  return out;
}

}  // namespace polycert
