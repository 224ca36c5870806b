#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cubealg {

// Exact arbitrary-precision rational coefficient type (expression templates
// disabled so values behave like ordinary arithmetic types).
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

Rational rational_from_string(const std::string& text);

}  // namespace cubealg
