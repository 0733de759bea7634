#pragma once

#include <boost/rational.hpp>
#include <string>

#include "hfree/errors.hpp"

namespace hfree {

using Rational = boost::rational<long long>;

// Accepts "3/10", "0.3", "1", ".5" — always exact.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& r);

}  // namespace hfree
