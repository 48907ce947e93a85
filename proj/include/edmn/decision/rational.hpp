#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace edmn::decision {

using Rational = boost::multiprecision::cpp_rational;

// Accepts integers ("-2"), fractions ("3/2") and decimals ("0.25").
// Throws UtilityError on anything else.
Rational parse_rational(std::string_view text);

// "3/2", "-1", "0"
std::string to_string(const Rational& value);

}  // namespace edmn::decision
