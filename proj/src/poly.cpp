#include "lehmer/poly.hpp"

namespace lehmer {

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& x : f.coeffs()) v.push_back(x / c);
  return IntPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& f) {
  if (f.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : f.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(numerator(c) * (den / denominator(c)));
  return primitive_part(IntPoly(std::move(v)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<BigRat> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<BigRat> quo(rem.size() - dg, BigRat(0));
  const BigRat& lead = g.leading();
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    const BigRat q = rem[i] / lead;
    quo[i - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::pair<RatPoly, RatPoly> divmod(const IntPoly& f, const IntPoly& g) {
  return divmod(to_rational(f), to_rational(g));
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> quo(rem.size() - dg, BigInt(0));
  const BigInt& lead = g.leading();
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i] == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[i], lead, q, r);
    if (r != 0) throw DomainError("inexact polynomial division");
    quo[i - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw DomainError("inexact polynomial division");
  return IntPoly(std::move(quo));
}

bool divides(const IntPoly& g, const IntPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  // Primitive remainder sequence: every step stays in Z[t] and is kept small.
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  return f * (BigRat(1) / f.leading());
}

RatPoly monic_gcd(const IntPoly& f, const IntPoly& g) { return monic(to_rational(gcd(f, g))); }

RatPoly quotient(const RatPoly& f, const RatPoly& g) { return divmod(f, g).first; }

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm over Q with monic gcds.
  const RatPoly fq = monic(to_rational(f));
  const RatPoly dfq = fq.derivative();
  const RatPoly a0 = monic_gcd(f, f.derivative());
  RatPoly b = quotient(fq, a0);
  RatPoly d = quotient(dfq, a0) - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const RatPoly a = d.is_zero() ? b : monic(to_rational(gcd(primitive_part(b), primitive_part(d))));
    if (a.degree() >= 1) out.emplace_back(primitive_part(a), i);
    b = quotient(b, a);
    d = quotient(d, a) - b.derivative();
  }
  return out;
}

bool is_squarefree(const IntPoly& f) { return gcd(f, f.derivative()).degree() <= 0; }

}  // namespace lehmer
