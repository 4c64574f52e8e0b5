#include "lehmer/poly_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace lehmer {

BigInt parse_integer(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("malformed integer '" + s + "'");
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool looks_like_coefficient_list(const std::string& s) {
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-' || c == '+')) return false;
  return true;
}

std::vector<BigInt> parse_coefficient_list(const std::string& s) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_integer(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Human syntax into exponent -> coefficient.
std::map<long, BigInt> parse_terms(const std::string& s) {
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<long, BigInt> terms;
  std::size_t i = 0;
  const auto at = [&](std::size_t k) { return k < s.size() ? s[k] : '\0'; };
  while (i < s.size()) {
    int sign = 1;
    if (at(i) == '+' || at(i) == '-') {
      sign = at(i) == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i));
    }
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(at(i)))) digits.push_back(s[i++]);
    BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    if (at(i) == '*') {
      if (digits.empty()) throw ParseError("'*' without a coefficient");
      ++i;
      if (at(i) != 't' && at(i) != 'x') throw ParseError("expected variable after '*'");
    }
    long exponent = 0;
    if (at(i) == 't' || at(i) == 'x') {
      ++i;
      exponent = 1;
      if (at(i) == '^') {
        ++i;
        std::string e;
        if (at(i) == '-' || at(i) == '+') e.push_back(s[i++]);
        if (at(i) == '(') {
          ++i;
          if (at(i) == '-' || at(i) == '+') e.push_back(s[i++]);
          while (std::isdigit(static_cast<unsigned char>(at(i)))) e.push_back(s[i++]);
          if (at(i) != ')') throw ParseError("unbalanced parenthesis in exponent");
          ++i;
        } else {
          while (std::isdigit(static_cast<unsigned char>(at(i)))) e.push_back(s[i++]);
        }
        if (e.empty() || e == "-" || e == "+") throw ParseError("missing exponent");
        exponent = std::stol(e);
      }
    } else if (digits.empty()) {
      throw ParseError("expected a coefficient or variable at position " + std::to_string(i));
    }
    terms[exponent] += sign * coeff;
  }
  return terms;
}

void append_term(std::ostringstream& out, const BigInt& c, long exponent, bool first) {
  const bool negative = c < 0;
  const BigInt mag = abs(c);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (exponent == 0) {
    out << mag;
    return;
  }
  if (mag != 1) out << mag << " ";
  out << "t";
  if (exponent != 1) out << "^" << exponent;
}

}  // namespace



IntPoly parse_poly(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (looks_like_coefficient_list(s) && s.find(',') != std::string::npos) return IntPoly(parse_coefficient_list(s));
  std::vector<BigInt> coeffs;
  for (const auto& [e, c] : parse_terms(s)) {
    if (e < 0) throw ParseError("negative exponent in an ordinary polynomial");
    if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1, BigInt(0));
    coeffs[static_cast<std::size_t>(e)] += c;
  }
  return IntPoly(std::move(coeffs));
}

LaurentPoly parse_laurent(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (looks_like_coefficient_list(s) && s.find(',') != std::string::npos)
    return LaurentPoly(parse_coefficient_list(s), 0);
  const auto terms = parse_terms(s);
  const long lo = terms.begin()->first;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(terms.rbegin()->first - lo) + 1, BigInt(0));
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] += c;
  return LaurentPoly(std::move(coeffs), lo);
}

std::string format_coeffs(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  return out.str();
}

std::string format_human(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    append_term(out, f[i], static_cast<long>(i), first);
    first = false;
  }
  return out.str();
}

std::string format_laurent(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    append_term(out, f.coeffs()[i], f.min_deg() + static_cast<long>(i), first);
    first = false;
  }
  return out.str();
}

}  // namespace lehmer
