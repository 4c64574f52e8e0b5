#pragma once

#include "lehmer/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace lehmer {

/// Dense univariate polynomial over an exact ring, coefficients in ascending
/// degree. The zero polynomial has an empty coefficient vector, so the leading
/// coefficient of a nonzero polynomial is never zero.
template <typename Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  /// Constant polynomial; lets Eigen build zero and identity matrices.
  Poly(int c) : coeffs_{Scalar(c)} { trim(); }  // NOLINT
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
  static Poly monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Poly(std::move(v));
  }
  /// The polynomial t.
  static Poly t() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of t^i, zero beyond the stored range.
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return v < coeffs_.size() ? v : 0;
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// f(t^r).
  Poly inflate(std::size_t r) const {
    if (is_zero()) return {};
    std::vector<Scalar> v((coeffs_.size() - 1) * r + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * r] = coeffs_[i];
    return Poly(std::move(v));
  }

  /// f(-t).
  Poly negate_variable() const {
    std::vector<Scalar> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
  }

  /// t^deg f(1/t).
  Poly reversed() const {
    std::vector<Scalar> v(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(v));
  }

  /// Divide out the largest power of t.
  Poly strip_t() const {
    const std::size_t v = valuation();
    return Poly(std::vector<Scalar>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
  }

  Poly operator-() const {
    std::vector<Scalar> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

template <typename Scalar>
Poly<Scalar> pow(Poly<Scalar> base, std::size_t e) {
  Poly<Scalar> acc = Poly<Scalar>::constant(Scalar(1));
  while (e) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return acc;
}

inline RatPoly to_rational(const IntPoly& f) {
  std::vector<BigRat> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

/// Greatest common divisor of the coefficients, nonnegative; 0 for the zero polynomial.
BigInt content(const IntPoly& f);

/// f / content(f), with the sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& f);

/// Clear denominators of a rational polynomial and return its primitive part.
IntPoly primitive_part(const RatPoly& f);

/// Quotient and remainder over the rationals. Throws DomainError for g == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);
std::pair<RatPoly, RatPoly> divmod(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g in Z[t]; throws DomainError when g does not divide f.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// True when g divides f in Q[t].
bool divides(const IntPoly& g, const IntPoly& f);

/// Gcd over Q[t], returned primitive with positive leading coefficient.
/// gcd(0, 0) is the zero polynomial.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Squarefree decomposition f = c * prod_i s_i^i (Yun). Entry (s, i) for
/// each nonconstant s_i; factors are primitive with positive leading term.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// True when gcd(f, f') is constant.
bool is_squarefree(const IntPoly& f);

}  // namespace lehmer

namespace Eigen {

template <typename Scalar>
struct NumTraits<lehmer::Poly<Scalar>> : GenericNumTraits<lehmer::Poly<Scalar>> {
  using Real = lehmer::Poly<Scalar>;
  using NonInteger = lehmer::Poly<Scalar>;
  using Nested = lehmer::Poly<Scalar>;
  using Literal = lehmer::Poly<Scalar>;
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
