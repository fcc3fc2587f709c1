#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cremona {

// Exact arithmetic over Q. cpp_rational keeps values in lowest terms
// with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cremona
