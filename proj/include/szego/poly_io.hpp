#pragma once

// Text and JSON forms of exact polynomials.
//
// Canonical text: terms "(re+imi)*z^a*zbar^b" joined by " + ", highest degree
// first, every exponent written out; the zero polynomial is "0". Real
// polynomials use x1..xn in the same way. The canonical form round-trips
// bit-exactly through the parser.
//
// Pretty text drops unit exponents and factors of degree zero, e.g.
// "(4/5)*x^2 + (-4/5)*y^2 + (4/5)".
//
// The parser accepts either form plus general expressions: + - * ^, division
// by constants, parentheses, rational literals "p/q", decimals, and an "i"
// suffix for imaginary literals ("3/4i" is (3/4)i).

#include "szego/polynomial.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace szego {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /// 0-based character offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

std::string to_string(const PolyZZbar& p);
std::string to_pretty_string(const PolyZZbar& p);
std::string to_string(const PolyRealN& p);
std::string to_pretty_string(const PolyRealN& p);
std::ostream& operator<<(std::ostream& os, const PolyZZbar& p);
std::ostream& operator<<(std::ostream& os, const PolyRealN& p);

/// Variables: z, zbar, and x, y (substituted as (z+zbar)/2, (z-zbar)/(2i)).
PolyZZbar parse_zzbar(std::string_view text);
/// Variables: x1..xn; also x, y for dim 2 and x, y, z for dim 3 (x alone for dim 1).
PolyRealN parse_real(std::string_view text, std::size_t dim);

/// [{a, b, re: "p/q", im: "p/q"}, ...]
nlohmann::json to_json(const PolyZZbar& p);
PolyZZbar zzbar_from_json(const nlohmann::json& j);
/// {dim, terms: [{alpha: [...], re, im}, ...]}
nlohmann::json to_json(const PolyRealN& p);
PolyRealN real_from_json(const nlohmann::json& j);

}  // namespace szego
