#pragma once

#include <stdexcept>
#include <string>

#include "cremona/derivation.hpp"
#include "cremona/poly.hpp"

namespace cremona {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Grammar: poly := ["-"] term (("+"|"-") term)*
//          term := atom ("*" atom)*
//          atom := coeff | "x" nat ["^" nat]
//          coeff := nat ["/" nat]
// Whitespace is insignificant. Variables are x1..xn.
Poly parse_poly(const std::string& src, int n);

// Either n comma-separated polynomial images, or sum-of-terms form
// "<poly> d/dx<i> + ...".
Derivation parse_derivation(const std::string& src, int n);

Rat parse_rat(const std::string& src);

}  // namespace cremona
