#include "lehmer/sequence.hpp"

#include "lehmer/bareiss.hpp"
#include "lehmer/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace lehmer {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

BigRat parse_rational(std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(parse_integer(s));
  const BigInt num = parse_integer(trim(std::string_view(s).substr(0, slash)));
  const BigInt den = parse_integer(trim(std::string_view(s).substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return BigRat(num, den);
}

std::vector<BigRat> parse_rational_list(std::string_view text) {
  std::vector<BigRat> out;
  if (trim(text).empty()) throw ParseError("empty sequence");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

ExactSeq ExactSeq::from_integers(const std::vector<BigInt>& terms) {
  std::vector<BigRat> out(terms.begin(), terms.end());
  return ExactSeq(std::move(out));
}

ExactSeq ExactSeq::from_integers(std::initializer_list<long> terms) {
  std::vector<BigRat> out;
  for (long v : terms) out.emplace_back(v);
  return ExactSeq(std::move(out));
}

bool ExactSeq::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const BigRat& q) { return is_integer(q); });
}

ExactSeq ExactSeq::operator-(const ExactSeq& other) const {
  const std::size_t n = std::min(size(), other.size());
  std::vector<BigRat> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = terms_[i] - other.terms_[i];
  return ExactSeq(std::move(out));
}

ExactSeq ExactSeq::operator+(const ExactSeq& other) const {
  const std::size_t n = std::min(size(), other.size());
  std::vector<BigRat> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = terms_[i] + other.terms_[i];
  return ExactSeq(std::move(out));
}

ExactSeq ExactSeq::prefix(std::size_t n) const {
  if (n > size()) throw DomainError("prefix longer than the sequence");
  return ExactSeq(std::vector<BigRat>(terms_.begin(), terms_.begin() + static_cast<long>(n)));
}

BigRat hankel_det(const ExactSeq& a, std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw DomainError("hankel_det: n and k must be positive");
  if (n + 2 * k - 2 > a.size())
    throw DomainError("hankel_det: window a_" + std::to_string(n) + " .. a_" + std::to_string(n + 2 * k - 2) +
                      " exceeds the " + std::to_string(a.size()) + " supplied terms");
  // Clear denominators so the elimination runs over the integers.
  BigInt scale = 1;
  for (std::size_t i = n; i <= n + 2 * k - 2; ++i) scale = lcm(scale, denominator(a(i)));
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> h(kk, kk);
  for (Eigen::Index i = 0; i < kk; ++i)
    for (Eigen::Index j = 0; j < kk; ++j) {
      const BigRat& v = a(n + static_cast<std::size_t>(i + j));
      h(i, j) = numerator(v) * (scale / denominator(v));
    }
  const BigInt det = bareiss_determinant(h);
  BigInt scale_k = 1;
  for (std::size_t i = 0; i < k; ++i) scale_k *= scale;
  return BigRat(det, scale_k);
}

GrowthEstimate growth_rate(const ExactSeq& a, std::size_t k, std::size_t window) {
  if (k < 1) throw DomainError("growth_rate: k must be positive");
  if (window < 1) throw DomainError("growth_rate: window must be positive");
  if (a.size() + 2 < 2 * k || a.size() + 2 - 2 * k < window)
    throw DomainError("growth_rate: need " + std::to_string(window + 2 * k - 2) + " terms for k = " +
                      std::to_string(k) + " and window " + std::to_string(window) + ", have " +
                      std::to_string(a.size()));
  const std::size_t last = a.size() + 2 - 2 * k;
  GrowthEstimate est;
  est.first_n = last + 1 - window;
  est.last_n = last;
  est.window_min = INFINITY;
  est.window_max = 0.0;
  for (std::size_t n = est.first_n; n <= last; ++n) {
    const BigRat h = hankel_det(a, n, k);
    const double root = h == 0 ? 0.0 : std::exp(log_abs(h) / static_cast<double>(n));
    est.window_min = std::min(est.window_min, root);
    est.window_max = std::max(est.window_max, root);
  }
  est.value = est.window_max;
  return est;
}

std::size_t max_fit_degree(std::size_t length) { return length / 3; }

std::optional<Recurrence> fit_min_poly(const ExactSeq& a, std::size_t d_max, std::optional<std::size_t> margin) {
  const std::size_t extra = margin.value_or(d_max);
  if (a.size() < 2 * d_max + extra)
    throw DomainError("fit_min_poly: need at least " + std::to_string(2 * d_max + extra) + " terms for d_max = " +
                      std::to_string(d_max) + ", have " + std::to_string(a.size()));
  // Berlekamp-Massey over Q. c is the connection polynomial 1 + c_1 x + ...
  const auto& s = a.terms();
  std::vector<BigRat> c{BigRat(1)}, b{BigRat(1)};
  std::size_t L = 0, m = 1;
  BigRat last_discrepancy = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    BigRat d = s[n];
    for (std::size_t i = 1; i <= L && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    const BigRat coef = d / last_discrepancy;
    std::vector<BigRat> next = c;
    if (next.size() < b.size() + m) next.resize(b.size() + m);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + m] -= coef * b[i];
    if (2 * L <= n) {
      b = c;
      L = n + 1 - L;
      last_discrepancy = d;
      m = 1;
    } else {
      ++m;
    }
    c = std::move(next);
    if (L > d_max) return std::nullopt;
  }
  c.resize(std::max(c.size(), L + 1));
  std::vector<BigInt> coeffs(L + 1);
  for (std::size_t i = 0; i <= L; ++i) {
    const BigRat& v = c[L - i];
    if (!is_integer(v)) return std::nullopt;
    coeffs[i] = numerator(v);
  }
  Recurrence r;
  r.char_poly = IntPoly(std::move(coeffs));
  r.init.assign(s.begin(), s.begin() + static_cast<long>(L));
  r.offset = 1;
  return r;
}

std::vector<double> exact_growth_rates(const IntPoly& min_poly, std::size_t k_max, double tol) {
  if (min_poly.is_zero() || !min_poly.is_monic())
    throw DomainError("exact_growth_rates: minimal polynomial must be monic");
  std::vector<double> moduli;
  if (min_poly.degree() >= 1) {
    const RootList list = roots(min_poly, tol);
    for (const auto& r : list.roots)
      if (r.value != std::complex<double>(0.0, 0.0))
        for (int i = 0; i < r.multiplicity; ++i) moduli.push_back(std::abs(r.value));
  }
  std::sort(moduli.rbegin(), moduli.rend());
  std::vector<double> out(k_max + 1, 0.0);
  out[0] = 1.0;
  long double product = 1.0L;
  for (std::size_t k = 1; k <= k_max && k <= moduli.size(); ++k) {
    product *= moduli[k - 1];
    out[k] = static_cast<double>(product);
  }
  return out;
}

MaxGrowth max_growth_exact(const ExactSeq& a, std::size_t d_max, double tol) {
  const auto rec = fit_min_poly(a, d_max);
  if (!rec) throw DomainError("max_growth_exact: no recurrence of degree <= " + std::to_string(d_max) + " found");
  const MahlerMeasure m = mahler_measure(rec->char_poly, tol);
  return {m.value, m.error_bound, rec->char_poly};
}

ExactSeq seq_from_recurrence(const Recurrence& r, std::size_t N) {
  if (r.char_poly.is_zero() || !r.char_poly.is_monic())
    throw DomainError("seq_from_recurrence: characteristic polynomial must be monic");
  const std::size_t d = r.degree();
  if (r.init.size() != d)
    throw DomainError("seq_from_recurrence: expected " + std::to_string(d) + " initial terms, got " +
                      std::to_string(r.init.size()));
  if (N < d) throw DomainError("seq_from_recurrence: N must be at least the degree");
  if (r.offset > 1) throw DomainError("seq_from_recurrence: offset must be 0 or 1");
  std::vector<BigRat> all(r.init.begin(), r.init.end());
  const std::size_t total = N + (r.offset == 0 ? 1 : 0);
  while (all.size() < total) {
    BigRat next = 0;
    const std::size_t base = all.size() - d;
    for (std::size_t i = 0; i < d; ++i) next -= BigRat(r.char_poly[i]) * all[base + i];
    all.push_back(next);
  }
  if (r.offset == 0) all.erase(all.begin());
  all.resize(N);
  return ExactSeq(std::move(all));
}

TailEquivalence tail_equivalence(const ExactSeq& a, const ExactSeq& b, std::size_t d_max, double tol) {
  const auto ra = fit_min_poly(a, d_max);
  const auto rb = fit_min_poly(b, d_max);
  if (!ra || !rb) throw DomainError("tail_equivalence: no recurrence of degree <= " + std::to_string(d_max) + " found");
  auto outside = [tol](const IntPoly& f) {
    if (f.degree() < 1) return std::vector<CertifiedRoot>{};
    return roots_outside_unit_circle(roots(f, tol));
  };
  TailEquivalence t;
  t.outside_roots_a = outside(ra->char_poly);
  t.outside_roots_b = outside(rb->char_poly);
  t.agree = t.outside_roots_a.size() == t.outside_roots_b.size();
  std::vector<bool> used(t.outside_roots_b.size(), false);
  for (const auto& x : t.outside_roots_a) {
    if (!t.agree) break;
    bool matched = false;
    for (std::size_t j = 0; j < t.outside_roots_b.size() && !matched; ++j) {
      const auto& y = t.outside_roots_b[j];
      if (!used[j] && x.multiplicity == y.multiplicity && std::abs(x.value - y.value) <= x.radius + y.radius) {
        used[j] = true;
        matched = true;
      }
    }
    t.agree = matched;
  }
  return t;
}

std::optional<Periodicity> eventually_periodic(const ExactSeq& a) {
  if (!a.is_integral()) throw DomainError("eventually_periodic: terms must be integers");
  const std::size_t N = a.size();
  for (std::size_t p = 1; 3 * p <= N; ++p) {
    // Least preperiod for this period: just past the last index breaking a_n == a_{n+p}.
    std::size_t s = 0;
    for (std::size_t n = N - p; n >= 1; --n)
      if (a(n) != a(n + p)) {
        s = n;
        break;
      }
    if (N - s >= 3 * p) return Periodicity{s, p};
  }
  return std::nullopt;
}

double GrowthReport::max_growth() const {
  double best = 0.0;
  for (const auto& e : entries) best = std::max(best, e.value());
  return best;
}

GrowthReport growth_report(const ExactSeq& a, std::size_t k_max, std::size_t window, double tol) {
  if (a.empty()) throw DomainError("growth_report: empty sequence");
  GrowthReport report;
  report.window = window;
  if (const auto rec = fit_min_poly(a, max_fit_degree(a.size()))) report.min_poly = rec->char_poly;
  std::vector<double> exact;
  if (report.min_poly) exact = exact_growth_rates(*report.min_poly, k_max, tol);
  GrowthEntry zero;
  zero.k = 0;
  zero.estimate = 1.0;
  zero.exact = 1.0;
  zero.window_min = zero.window_max = 1.0;
  report.entries.push_back(zero);
  for (std::size_t k = 1; k <= k_max; ++k) {
    GrowthEntry e;
    e.k = k;
    if (report.min_poly) e.exact = exact[k];
    if (a.size() + 2 >= 2 * k + window) {
      const GrowthEstimate g = growth_rate(a, k, window);
      e.estimate = g.value;
      e.window_min = g.window_min;
      e.window_max = g.window_max;
      e.first_n = g.first_n;
      e.last_n = g.last_n;
    } else if (!e.exact) {
      throw DomainError("growth_report: no recurrence detected and too few terms to estimate GR^(" +
                        std::to_string(k) + ")");
    }
    report.entries.push_back(e);
  }
  return report;
}

ExactSeq parse_seq(std::string_view text) { return ExactSeq(parse_rational_list(text)); }

std::string format_seq(const ExactSeq& a) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (i > 1) out << ',';
    out << a(i).str();
  }
  return out.str();
}

Recurrence parse_recurrence(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("recurrence must look like 'charpoly;init'");
  Recurrence r;
  r.char_poly = parse_poly(text.substr(0, semi));
  if (r.char_poly.is_zero() || !r.char_poly.is_monic())
    throw ParseError("recurrence characteristic polynomial must be monic");
  const std::string init = trim(text.substr(semi + 1));
  if (!init.empty()) r.init = parse_rational_list(init);
  if (r.init.size() != r.degree())
    throw ParseError("recurrence needs " + std::to_string(r.degree()) + " initial terms, got " +
                     std::to_string(r.init.size()));
  return r;
}

}  // namespace lehmer
