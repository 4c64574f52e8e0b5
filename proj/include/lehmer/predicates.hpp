#pragma once

#include "lehmer/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lehmer {

/// x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
IntPoly lehmer_polynomial();

std::uint64_t euler_phi(std::uint64_t n);

/// The d-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(std::uint64_t d);

/// Orders d (with repetition, ascending) such that f = prod Phi_d, or nullopt
/// when f is not a product of cyclotomic polynomials. Exact: only Phi_d with
/// phi(d) <= deg f can divide f, and phi(d) >= sqrt(d/2) bounds d by 2 deg^2.
/// Throws DomainError for non-monic f.
std::optional<std::vector<std::uint64_t>> cyclotomic_factorization(const IntPoly& f);

bool is_cyclotomic_product(const IntPoly& f);

/// Largest r with f(t) = g(t^r): the gcd of the exponents in the support.
/// Returns 0 for a nonzero constant (every r works). Throws for f == 0.
std::uint64_t polynomial_in_t_power(const IntPoly& f);

/// Coefficient list is a palindrome up to a global sign.
bool is_reciprocal(const IntPoly& f);

struct IrreducibilityCertificate {
  enum class Verdict { Irreducible, Reducible, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  /// "mod-p" (irreducible modulo the single witness prime), "degree-pattern"
  /// (factor degrees modulo the listed primes admit no proper factor),
  /// "root", "cyclotomic", "kronecker" (an explicit factor was found) or
  /// "exhausted".
  std::string method;
  std::vector<std::uint64_t> witness_primes;
  /// Nontrivial factor when the verdict is Reducible.
  IntPoly factor;
};

/// Sound certificate system, not a full factorizer. Irreducible verdicts come
/// from modular factor-degree information; Reducible verdicts carry an exact
/// integer factor found by root, cyclotomic, or bounded Kronecker search
/// (degree <= 16). Requires f primitive with degree >= 1.
IrreducibilityCertificate irreducibility_certificate(const IntPoly& f);

/// Degrees of the irreducible factors of f modulo p, or nullopt when p divides
/// the leading coefficient or f is not squarefree modulo p.
std::optional<std::vector<std::size_t>> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace lehmer
