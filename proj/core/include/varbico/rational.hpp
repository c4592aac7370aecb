#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace varbico {

/// Exact rational scalar used throughout; never a floating-point number.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Domain error: invalid input (bad variable name, wrong grading, rejected system, ...).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal invariant violation; indicates a bug, not a user mistake.
struct Defect : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace varbico
