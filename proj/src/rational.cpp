#include "cubealg/rational.hpp"

#include <stdexcept>

#include "cubealg/errors.hpp"

namespace cubealg {

std::string to_string(const Rational& x) { return x.str(); }

Rational rational_from_string(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ParseError("malformed rational: " + text);
  }
}

}  // namespace cubealg
