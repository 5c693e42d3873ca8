#ifndef POLYCERT_JSON_IO_HPP
#define POLYCERT_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <polycert/criteria.hpp>
#include <polycert/kronecker.hpp>
#include <polycert/newton_polygon.hpp>
#include <polycert/polynomial.hpp>
#include <polycert/roots.hpp>

namespace polycert {

using Json = nlohmann::ordered_json;

// Coefficients that fit in 64 bits are emitted as JSON numbers, anything
// larger as a decimal string; parsing accepts either form.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

// A polynomial is a coefficient array, constant term first.
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

Json polygon_to_json(const NewtonPolygon& polygon);
Json segment_vectors_to_json(const std::vector<SegmentVector>& system);
Json factorization_to_json(const Factorization& fact);
Json certificate_to_json(const Certificate& cert);
Json root_set_to_json(const RootSet& roots);

}  // namespace polycert

#endif
