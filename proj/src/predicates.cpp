#include "lehmer/predicates.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace lehmer {

namespace {

int moebius_small(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

IntPoly t_power_minus_one(std::uint64_t e) {
  return IntPoly::monomial(BigInt(1), e) - IntPoly::constant(BigInt(1));
}

IntPoly compute_cyclotomic(std::uint64_t d) {
  IntPoly num = IntPoly::constant(BigInt(1));
  IntPoly den = IntPoly::constant(BigInt(1));
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius_small(d / e);
    if (mu == 1) num = num * t_power_minus_one(e);
    if (mu == -1) den = den * t_power_minus_one(e);
  }
  return exact_div(num, den);
}

// ---------------------------------------------------------------------------
// Polynomials over F_p with word-size coefficients, ascending degree.

using Fp = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void fp_trim(Fp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp fp_reduce(const IntPoly& f, std::uint64_t p) {
  Fp out;
  const BigInt mod(p);
  for (const auto& c : f.coeffs()) {
    BigInt r = c % mod;
    if (r < 0) r += mod;
    out.push_back(r.convert_to<std::uint64_t>());
  }
  fp_trim(out);
  return out;
}

Fp fp_sub(Fp a, const Fp& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  fp_trim(out);
  return out;
}

/// Quotient and remainder; g must be nonzero.
std::pair<Fp, Fp> fp_divmod(Fp a, const Fp& g, std::uint64_t p) {
  if (a.size() < g.size()) return {{}, a};
  const std::uint64_t inv = inverse(g.back(), p);
  Fp q(a.size() - g.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= g.size();) {
    const std::uint64_t c = mulmod(a[i], inv, p);
    q[i - g.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::uint64_t& slot = a[i - g.size() + 1 + j];
      slot = (slot + p - mulmod(c, g[j], p)) % p;
    }
  }
  fp_trim(a);
  fp_trim(q);
  return {q, a};
}

Fp fp_mod(const Fp& a, const Fp& g, std::uint64_t p) { return fp_divmod(a, g, p).second; }

Fp fp_monic(Fp f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = inverse(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

Fp fp_derivative(const Fp& f, std::uint64_t p) {
  Fp d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  fp_trim(d);
  return d;
}

Fp fp_powmod(Fp base, std::uint64_t e, const Fp& modulus, std::uint64_t p) {
  Fp r{1};
  base = fp_mod(base, modulus, p);
  while (e) {
    if (e & 1U) r = fp_mod(fp_mul(r, base, p), modulus, p);
    base = fp_mod(fp_mul(base, base, p), modulus, p);
    e >>= 1U;
  }
  return r;
}

/// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::size_t> fp_factor_degrees(Fp f, std::uint64_t p) {
  std::vector<std::size_t> degrees;
  const Fp x{0, 1};
  Fp h = fp_mod(x, f, p);
  for (std::size_t i = 1; f.size() > 1 && 2 * i <= f.size() - 1; ++i) {
    h = fp_powmod(h, p, f, p);
    Fp g = fp_gcd(fp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      const std::size_t dg = g.size() - 1;
      for (std::size_t k = 0; k < dg / i; ++k) degrees.push_back(i);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(f.size() - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; out.size() < 60; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

// ---------------------------------------------------------------------------
// Kronecker search helpers.

std::vector<BigInt> divisors(const BigInt& n) {
  // Caller keeps |n| small enough for trial division.
  BigInt m = abs(n);
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<BigInt> out{1};
  for (const auto& [q, e] : primes) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

/// Lagrange interpolation through (x_i, y_i) over Q.
RatPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  RatPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly term = RatPoly::constant(BigRat(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      RatPoly lin{BigRat(-xs[j]), BigRat(1)};
      term = term * lin * (BigRat(1) / BigRat(xs[i] - xs[j]));
    }
    acc += term;
  }
  return acc;
}

std::optional<IntPoly> kronecker_factor(const IntPoly& f, const std::vector<bool>& allowed_degree,
                                        std::size_t budget) {
  const long n = f.degree();
  // Candidate evaluation points with small |f(x)| (fewer divisors).
  std::vector<std::pair<BigInt, BigInt>> points;
  for (long x = -12; x <= 12; ++x) {
    const BigInt v = f(BigInt(x));
    if (v != 0 && abs(v) < BigInt(1000000000LL)) points.emplace_back(BigInt(x), v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::vector<BigInt>> divs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    divs[i] = divisors(points[i].second);
    order.emplace_back(divs[i].size(), i);
  }
  std::sort(order.begin(), order.end());

  std::size_t work = 0;
  for (long d = 1; 2 * d <= n; ++d) {
    if (!allowed_degree[static_cast<std::size_t>(d)]) continue;
    if (points.size() < static_cast<std::size_t>(d + 1)) return std::nullopt;
    std::vector<BigInt> xs;
    std::vector<const std::vector<BigInt>*> choice;
    for (long k = 0; k <= d; ++k) {
      xs.push_back(points[order[static_cast<std::size_t>(k)].second].first);
      choice.push_back(&divs[order[static_cast<std::size_t>(k)].second]);
    }
    // Odometer over divisor choices; the first value is kept positive (g ~ -g).
    std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
    const auto signed_count = [&](std::size_t k) { return choice[k]->size() * (k == 0 ? 1 : 2); };
    while (true) {
      if (++work > budget) return std::nullopt;
      std::vector<BigInt> ys;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t m = choice[k]->size();
        const BigInt& v = (*choice[k])[idx[k] % m];
        ys.push_back(idx[k] < m ? v : BigInt(-v));
      }
      const RatPoly g = interpolate(xs, ys);
      if (g.degree() == d) {
        bool integral = true;
        for (const auto& c : g.coeffs()) integral = integral && is_integer(c);
        if (integral) {
          IntPoly gi = primitive_part(g);
          if (divides(gi, f)) return gi;
        }
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == signed_count(k)) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace

IntPoly lehmer_polynomial() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPoly& cyclotomic(std::uint64_t d) {
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPoly> cache;
  if (d == 0) throw DomainError("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly phi = compute_cyclotomic(d);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(d, std::move(phi)).first->second;
}

std::optional<std::vector<std::uint64_t>> cyclotomic_factorization(const IntPoly& f) {
  if (!f.is_monic()) throw DomainError("cyclotomic test requires a monic polynomial");
  std::vector<std::uint64_t> orders;
  IntPoly rest = f;
  const std::uint64_t deg = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t bound = std::max<std::uint64_t>(2, 2 * deg * deg);
  for (std::uint64_t d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree())) continue;
    const IntPoly& phi = cyclotomic(d);
    while (rest.degree() >= phi.degree() && divides(phi, rest)) {
      rest = exact_div(rest, phi);
      orders.push_back(d);
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return orders;
}

bool is_cyclotomic_product(const IntPoly& f) { return cyclotomic_factorization(f).has_value(); }

std::uint64_t polynomial_in_t_power(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("polynomial_in_t_power of the zero polynomial");
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) g = std::gcd(g, static_cast<std::uint64_t>(i));
  return g;
}

bool is_reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("is_reciprocal of the zero polynomial");
  const auto& c = f.coeffs();
  const std::size_t n = c.size();
  bool same = true, opposite = true;
  for (std::size_t i = 0; i < n; ++i) {
    same = same && c[i] == c[n - 1 - i];
    opposite = opposite && c[i] == -c[n - 1 - i];
  }
  return same || opposite;
}

std::optional<std::vector<std::size_t>> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
  Fp fp = fp_reduce(f, p);
  if (static_cast<long>(fp.size()) - 1 != f.degree()) return std::nullopt;
  fp = fp_monic(fp, p);
  if (fp_gcd(fp, fp_derivative(fp, p), p).size() > 1) return std::nullopt;
  return fp_factor_degrees(fp, p);
}

IrreducibilityCertificate irreducibility_certificate(const IntPoly& f) {
  using Verdict = IrreducibilityCertificate::Verdict;
  if (f.degree() < 1) throw DomainError("irreducibility certificate needs degree >= 1");
  if (content(f) != 1) throw DomainError("irreducibility certificate needs a primitive polynomial");
  IrreducibilityCertificate cert;
  const std::size_t n = static_cast<std::size_t>(f.degree());

  if (n > 1 && f[0] == 0) {
    cert.verdict = Verdict::Reducible;
    cert.method = "root";
    cert.factor = IntPoly::t();
    return cert;
  }

  // allowed[d]: some factor of degree d is still consistent with every prime seen.
  std::vector<bool> allowed(n + 1, true);
  std::vector<std::uint64_t> used;
  for (std::uint64_t p : small_primes()) {
    auto degrees = factor_degrees_mod_p(f, p);
    if (!degrees) continue;
    if (degrees->size() == 1) {
      cert.verdict = Verdict::Irreducible;
      cert.method = "mod-p";
      cert.witness_primes = {p};
      return cert;
    }
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (std::size_t d : *degrees)
      for (std::size_t s = n; s >= d; --s)
        if (sums[s - d]) sums[s] = true;
    bool changed = false;
    for (std::size_t d = 1; d < n; ++d) {
      if (allowed[d] && !sums[d]) {
        allowed[d] = false;
        changed = true;
      }
    }
    if (changed) used.push_back(p);
    bool any = false;
    for (std::size_t d = 1; d < n; ++d) any = any || allowed[d];
    if (!any) {
      cert.verdict = Verdict::Irreducible;
      cert.method = "degree-pattern";
      cert.witness_primes = used;
      return cert;
    }
  }

  // Explicit factors: rational roots and cyclotomic divisors are cheap.
  const BigInt small(1000000000LL);
  if (allowed[1] && abs(f[0]) < small && abs(f.leading()) < small) {
    for (const BigInt& q : divisors(f[0])) {
      for (const BigInt& r : divisors(f.leading())) {
        for (int sign : {1, -1}) {
          const IntPoly lin{BigInt(-sign * q), r};
          if (divides(lin, f)) {
            cert.verdict = Verdict::Reducible;
            cert.method = "root";
            cert.factor = primitive_part(lin);
            return cert;
          }
        }
      }
    }
  }
  const std::uint64_t bound = 2 * n * n;
  for (std::uint64_t d = 1; d <= bound; ++d) {
    const std::uint64_t phi = euler_phi(d);
    if (phi >= n || !allowed[phi]) continue;
    if (divides(cyclotomic(d), f)) {
      cert.verdict = Verdict::Reducible;
      cert.method = "cyclotomic";
      cert.factor = cyclotomic(d);
      return cert;
    }
  }
  if (n <= 16) {
    if (auto g = kronecker_factor(f, allowed, 200000)) {
      cert.verdict = Verdict::Reducible;
      cert.method = "kronecker";
      cert.factor = *g;
      return cert;
    }
  }
  cert.method = "exhausted";
  cert.witness_primes = used;
  return cert;
}

}  // namespace lehmer
