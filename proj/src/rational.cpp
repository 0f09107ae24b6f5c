#include "lcat/rational.hpp"

#include "lcat/errors.hpp"

namespace lcat {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw BadCoordinates("empty rational literal");
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw BadCoordinates("malformed rational literal: " + std::string(text));
  }
}

std::string rational_string(const Rational& value) {
  return value.str();
}

bool is_barycentric(const std::vector<Rational>& coords) {
  if (coords.empty()) return false;
  Rational sum = 0;
  for (const Rational& t : coords) {
    if (t < 0) return false;
    sum += t;
  }
  return sum == 1;
}

}  // namespace lcat
