#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lehmer {

// Expression templates are disabled so the types compose with Eigen's own.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

/// Base of every error the library throws. `code()` is a stable machine tag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Input outside an operation's domain (wrong sign, wrong shape, zero divisor...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// Malformed text input.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

/// Numerical certification did not reach the requested tolerance.
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what) : Error("precision_failure", what) {}
};

/// A configured work/storage cap was exceeded.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error("budget_exceeded", what) {}
};

/// An internal consistency check failed; always a bug.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& what) : Error("consistency_error", what) {}
};

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline bool is_integer(const BigRat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// Natural log of |x| for x != 0, valid far beyond the range of double.
inline double log_abs(const BigInt& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.backend().data());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

inline double log_abs(const BigRat& q) {
  return log_abs(numerator(q)) - log_abs(denominator(q));
}

inline long double to_long_double(const BigInt& x) {
  if (x == 0) return 0.0L;
  const BigInt mag = abs(x);
  const std::size_t bits = mpz_sizeinbase(mag.backend().data(), 2);
  const std::size_t shift = bits > 64 ? bits - 64 : 0;
  const BigInt top = mag >> shift;
  long double v = std::ldexp(static_cast<long double>(top.convert_to<unsigned long long>()),
                             static_cast<int>(shift));
  return x < 0 ? -v : v;
}

/// Exact quotient; throws DomainError when b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("integer division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw DomainError("inexact integer division");
  return q;
}

inline BigRat exact_div(const BigRat& a, const BigRat& b) {
  if (b == 0) throw DomainError("rational division by zero");
  return a / b;
}

inline double to_double(const BigRat& q) { return q.convert_to<double>(); }

}  // namespace lehmer
