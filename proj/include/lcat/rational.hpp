#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lcat {

// Exact rational arithmetic. Point equality in quotient spaces has to be
// decidable, so no floating point anywhere in the geometry.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (q > 0 after normalization). Throws BadCoordinates on
// malformed input.
Rational parse_rational(std::string_view text);

std::string rational_string(const Rational& value);

// True iff the coordinates are >= 0 and sum to exactly 1.
bool is_barycentric(const std::vector<Rational>& coords);

}  // namespace lcat
