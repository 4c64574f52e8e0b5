#pragma once

#include "lehmer/poly.hpp"

namespace lehmer {

/// Integer Laurent polynomial t^min_deg * body(t) with body(0) != 0.
/// The zero polynomial has an empty body and min_deg 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(IntPoly::constant(BigInt(c)), 0) {}  // NOLINT: ring literal
  LaurentPoly(const BigInt& c) : LaurentPoly(IntPoly::constant(c), 0) {}  // NOLINT
  LaurentPoly(IntPoly body, long min_deg = 0);
  /// Coefficients of t^min_deg, t^(min_deg+1), ...
  LaurentPoly(std::vector<BigInt> coeffs, long min_deg);

  static LaurentPoly monomial(const BigInt& c, long exponent);

  bool is_zero() const { return body_.is_zero(); }
  long min_deg() const { return min_deg_; }
  long max_deg() const { return min_deg_ + body_.degree(); }
  const IntPoly& body() const { return body_; }
  const std::vector<BigInt>& coeffs() const { return body_.coeffs(); }
  BigInt coeff(long exponent) const;

  /// The unique +-t^j multiple with min_deg 0 and positive constant term.
  /// Throws DomainError on the zero polynomial.
  LaurentPoly canonical() const;

  /// Value at t = 1.
  BigInt at_one() const;

  LaurentPoly operator-() const { return {-body_, min_deg_}; }
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return {a.body_ * b.body_, a.min_deg_ + b.min_deg_};
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.body_ == b.body_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void normalize();

  IntPoly body_;
  long min_deg_ = 0;
};

/// Exact quotient in Z[t, 1/t]; throws DomainError when not exact.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Equality up to multiplication by +-t^j.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace lehmer

namespace Eigen {

template <>
struct NumTraits<lehmer::LaurentPoly> : GenericNumTraits<lehmer::LaurentPoly> {
  using Real = lehmer::LaurentPoly;
  using NonInteger = lehmer::LaurentPoly;
  using Nested = lehmer::LaurentPoly;
  using Literal = lehmer::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen
