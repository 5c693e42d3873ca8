#ifndef POLYCERT_INTEGER_HPP
#define POLYCERT_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace polycert {

// Arbitrary-precision signed integer used for all exact arithmetic.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor(n^(1/k)) for n >= 0, k >= 1.
Int integer_kth_root(const Int& n, unsigned k);

}  // namespace polycert

#endif
