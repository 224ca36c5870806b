#pragma once

#include <stdexcept>

namespace cubealg {

// Operands with mismatched ambient parameters (n or r).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A multiset over [n] with some multiplicity >= r.
class InvalidMultisetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Leading term of the zero polynomial requested.
class ZeroPolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monomial ideal without a pure power of every variable; the quotient is
// infinite-dimensional and standard monomials cannot be enumerated.
class InfiniteQuotientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monomial is not a standard monomial of the leading-term ideal.
class NotStandardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested enumeration exceeds the configured element limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubealg
