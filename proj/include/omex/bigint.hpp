#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace omex {

// Exact arbitrary-precision integer used for every series coefficient.
using Int = boost::multiprecision::cpp_int;

// Exact rational, used for cusp orders and eta-quotient weights.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace omex
