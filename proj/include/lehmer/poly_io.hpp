#pragma once

#include "lehmer/laurent.hpp"
#include "lehmer/poly.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace lehmer {

/// Optional sign followed by decimal digits. Throws ParseError.
BigInt parse_integer(std::string_view text);

/// Parses either comma-separated ascending coefficients ("1,0,-1") or the
/// human syntax ("t^2 - 1", "x^10+x^9-x^7", "3*t - 2t^2"). Throws ParseError.
IntPoly parse_poly(std::string_view text);

/// Like parse_poly but negative exponents are allowed in the human syntax;
/// the comma form is read as coefficients starting at t^0.
LaurentPoly parse_laurent(std::string_view text);

/// "c0,c1,...,cn"; "0" for the zero polynomial.
std::string format_coeffs(const IntPoly& f);

/// Descending human form, e.g. "t^10 + t^9 - t^7 - 1"; "0" for zero.
std::string format_human(const IntPoly& f);

/// Ascending human form "c0 + c1 t + c2 t^2", negative exponents as t^-k.
std::string format_laurent(const LaurentPoly& f);

inline std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << format_human(f); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << format_laurent(f); }

}  // namespace lehmer
