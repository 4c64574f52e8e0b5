#include "lehmer/laurent.hpp"

namespace lehmer {

LaurentPoly::LaurentPoly(IntPoly body, long min_deg) : body_(std::move(body)), min_deg_(min_deg) {
  normalize();
}

LaurentPoly::LaurentPoly(std::vector<BigInt> coeffs, long min_deg)
    : LaurentPoly(IntPoly(std::move(coeffs)), min_deg) {}

LaurentPoly LaurentPoly::monomial(const BigInt& c, long exponent) {
  return {IntPoly::constant(c), exponent};
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    min_deg_ = 0;
    return;
  }
  const std::size_t v = body_.valuation();
  if (v > 0) {
    body_ = body_.strip_t();
    min_deg_ += static_cast<long>(v);
  }
}

BigInt LaurentPoly::coeff(long exponent) const {
  if (is_zero() || exponent < min_deg_) return 0;
  return body_.coeff(static_cast<std::size_t>(exponent - min_deg_));
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) throw DomainError("canonical form of the zero Laurent polynomial");
  IntPoly b = body_;
  if (b[0] < 0) b = -b;
  return {std::move(b), 0};
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : body_.coeffs()) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(min_deg_, o.min_deg_);
  IntPoly a = body_ * IntPoly::monomial(BigInt(1), static_cast<std::size_t>(min_deg_ - lo));
  IntPoly b = o.body_ * IntPoly::monomial(BigInt(1), static_cast<std::size_t>(o.min_deg_ - lo));
  body_ = a + b;
  min_deg_ = lo;
  normalize();
  return *this;
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DomainError("Laurent division by zero");
  if (f.is_zero()) return {};
  // Bodies have nonzero constant terms, so the quotient body is a polynomial.
  return {exact_div(f.body(), g.body()), f.min_deg() - g.min_deg()};
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.canonical() == b.canonical();
}

}  // namespace lehmer
