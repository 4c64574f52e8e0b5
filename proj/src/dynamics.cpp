#include "lehmer/dynamics.hpp"

#include "lehmer/bareiss.hpp"
#include "lehmer/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lehmer {

namespace {

void require_square(const IntMatrix& a, const char* who) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw DomainError(std::string(who) + ": matrix must be square and nonempty");
}

void require_monic(const IntPoly& f, const char* who) {
  if (f.is_zero() || !f.is_monic()) throw DomainError(std::string(who) + ": polynomial must be monic");
}

BigRat exact_rational(double x) {
  // Every finite double is a dyadic rational.
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigRat q(scaled);
  const int shift = exp - 53;
  const BigInt p2 = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(std::abs(shift)));
  return shift >= 0 ? BigRat(q * BigRat(p2)) : BigRat(q / BigRat(p2));
}

int sign_at(const IntPoly& g, const BigRat& x) {
  BigRat acc = 0;
  for (std::size_t i = g.size(); i-- > 0;) acc = acc * x + BigRat(g[i]);
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

/// The root certified in `r` is real: g changes sign on the part of the real
/// axis inside the disk, and the disk isolates a single root.
bool certified_real(const IntPoly& squarefree, const CertifiedRoot& r) {
  const double im = std::fabs(r.value.imag());
  if (im >= r.radius) return false;
  const double half = std::sqrt(r.radius * r.radius - im * im) * (1.0 - 1e-9);
  const int lo = sign_at(squarefree, exact_rational(r.value.real() - half));
  const int hi = sign_at(squarefree, exact_rational(r.value.real() + half));
  return lo * hi < 0;
}

}  // namespace

IntMatrix identity_matrix(Eigen::Index m) {
  IntMatrix a = IntMatrix::Constant(m, m, BigInt(0));
  for (Eigen::Index i = 0; i < m; ++i) a(i, i) = 1;
  return a;
}

IntMatrix int_matrix(const std::vector<std::vector<BigInt>>& rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  if (m == 0) throw DomainError("matrix must be nonempty");
  IntMatrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != m) throw DomainError("matrix must be square");
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<BigInt>> v;
  for (const auto& r : rows) v.emplace_back(r.begin(), r.end());
  return int_matrix(v);
}

IntMatrix matrix_power(const IntMatrix& a, unsigned n) {
  require_square(a, "matrix_power");
  IntMatrix result = identity_matrix(a.rows());
  IntMatrix base = a;
  while (n > 0) {
    if (n & 1U) result = (result * base).eval();
    n >>= 1U;
    if (n > 0) base = (base * base).eval();
  }
  return result;
}

IntMatrix companion(const IntPoly& f) {
  require_monic(f, "companion");
  if (f.degree() < 1) throw DomainError("companion: degree must be at least 1");
  const auto d = static_cast<Eigen::Index>(f.degree());
  IntMatrix c = IntMatrix::Constant(d, d, BigInt(0));
  for (Eigen::Index i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < d; ++i) c(i, d - 1) = -f[static_cast<std::size_t>(i)];
  return c;
}

IntPoly char_poly(const IntMatrix& a) {
  require_square(a, "char_poly");
  const Eigen::Index m = a.rows();
  PolyMatrix x(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) x(i, j) = IntPoly::constant(BigInt(-a(i, j)));
  for (Eigen::Index i = 0; i < m; ++i) x(i, i) += IntPoly::t();
  return bareiss_determinant(x);
}

ExactSeq trace_powers(const IntMatrix& a, std::size_t N) {
  require_square(a, "trace_powers");
  if (N < 1) throw DomainError("trace_powers: N must be positive");
  std::vector<BigRat> out;
  out.reserve(N);
  IntMatrix p = a;
  for (std::size_t n = 1; n <= N; ++n) {
    out.emplace_back(p.trace());
    if (n < N) p = (p * a).eval();
  }
  return ExactSeq(std::move(out));
}

ExactSeq lefschetz_seq(const IntMatrix& a, bool has_boundary, std::size_t N) {
  const ExactSeq tr = trace_powers(a, N);
  const BigRat base = has_boundary ? 1 : 2;
  std::vector<BigRat> out;
  for (const auto& v : tr.terms()) out.push_back(base - v);
  return ExactSeq(std::move(out));
}

ExactSeq signed_trace_seq(const SignedShiftSystem& s, std::size_t N) {
  if (s.blocks.empty()) throw DomainError("signed_trace_seq: system must be nonempty");
  std::vector<BigRat> total(N, BigRat(0));
  for (const auto& block : s.blocks) {
    if (block.sign != 1 && block.sign != -1) throw DomainError("signed_trace_seq: signs must be +1 or -1");
    const ExactSeq tr = trace_powers(block.matrix, N);
    for (std::size_t n = 0; n < N; ++n) total[n] += block.sign * tr.terms()[n];
  }
  return ExactSeq(std::move(total));
}

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius: n must be positive");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<BigInt> power_sums(const IntPoly& f, std::size_t N) {
  require_monic(f, "power_sums");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // e(i) is the coefficient of t^(d-i).
  auto e = [&](std::size_t i) -> BigInt { return i <= d ? f[d - i] : BigInt(0); };
  std::vector<BigInt> p(N + 1, BigInt(0));
  for (std::size_t k = 1; k <= N; ++k) {
    BigInt acc = k <= d ? BigInt(e(k) * k) : BigInt(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) acc += e(i) * p[k - i];
    p[k] = -acc;
  }
  p.erase(p.begin());
  return p;
}

BigInt net_trace(const IntPoly& f, std::uint64_t n) {
  if (n < 1) throw DomainError("net_trace: n must be positive");
  const auto p = power_sums(f, n);
  BigInt total = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (n % k == 0) total += moebius(n / k) * p[k - 1];
  return total;
}

std::vector<BigInt> net_traces(const IntPoly& f, std::size_t N) {
  const auto p = power_sums(f, N);
  std::vector<BigInt> out(N, BigInt(0));
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (n % k == 0) out[n - 1] += moebius(n / k) * p[k - 1];
  return out;
}

double net_trace(const std::vector<std::complex<double>>& lambda, std::uint64_t n) {
  if (n < 1) throw DomainError("net_trace: n must be positive");
  std::complex<double> total = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    std::complex<double> tr = 0.0;
    for (const auto& z : lambda) tr += std::pow(z, static_cast<double>(k));
    total += static_cast<double>(moebius(n / k)) * tr;
  }
  return total.real();
}

PerronReport perron_check(const IntPoly& f, std::size_t n_net, double tol) {
  require_monic(f, "perron_check");
  PerronReport report;
  const IntPoly core = f.strip_t();
  if (core.degree() >= 1) {
    const RootList list = roots(core, tol);
    const CertifiedRoot& top = list.roots.front();
    bool dominant = top.multiplicity == 1;
    for (std::size_t i = 1; i < list.roots.size() && dominant; ++i) {
      const auto& other = list.roots[i];
      dominant = std::abs(top.value) - top.radius > std::abs(other.value) + other.radius;
    }
    const IntPoly squarefree = exact_div(core, gcd(core, core.derivative()));
    dominant = dominant && top.value.real() - top.radius > 0 && certified_real(squarefree, top);
    report.dominant_real = dominant;
    if (dominant) report.dominant_root = top.value.real();
  }
  report.checked_up_to = n_net;
  report.net_traces_ok = true;
  const auto traces = net_traces(f, n_net);
  for (std::size_t n = 1; n <= n_net; ++n)
    if (traces[n - 1] < 0) {
      report.net_traces_ok = false;
      report.first_negative = n;
      break;
    }
  report.is_perron_candidate = report.integer_coeffs && report.dominant_real && report.net_traces_ok;
  return report;
}

std::optional<Padding> cyclotomic_padding(const IntPoly& f, const PaddingOptions& options) {
  require_monic(f, "cyclotomic_padding");
  if (!perron_check(f, 1).dominant_real)
    throw DomainError("cyclotomic_padding: polynomial has no dominant real root");
  const std::size_t N = options.n_net;
  const auto base = net_traces(f, N);
  // Net traces of Phi_d: mu(d/n) * n when n divides d.
  auto contribution = [](std::uint64_t d, std::size_t n) -> long {
    return d % n == 0 ? static_cast<long>(moebius(d / n)) * static_cast<long>(n) : 0L;
  };
  // Net traces beyond what any padding can move are clamped; they only need their sign.
  const long max_gain = static_cast<long>(options.max_multiplicity) * static_cast<long>(options.search_bound) *
                        static_cast<long>(options.search_bound + 1);
  std::vector<long> level(N, 0);
  for (std::size_t n = 0; n < N; ++n) {
    if (base[n] < -max_gain) return std::nullopt;
    level[n] = base[n] > max_gain ? max_gain + 1 : base[n].convert_to<long>();
  }

  std::vector<std::uint64_t> orders;
  std::vector<long> gained(N, 0);
  auto satisfied = [&] {
    for (std::size_t n = 0; n < N; ++n)
      if (level[n] + gained[n] < 0) return false;
    return true;
  };
  std::uint64_t max_total = 0;
  for (std::uint64_t d = 1; d <= options.search_bound; ++d)
    max_total += euler_phi(d) * static_cast<std::uint64_t>(options.max_multiplicity);

  // Depth-first in ascending order visits each total degree lexicographically.
  std::function<bool(std::uint64_t, std::uint64_t, int)> search = [&](std::uint64_t min_d, std::uint64_t remaining,
                                                                      int used_of_min) -> bool {
    if (remaining == 0) return satisfied();
    for (std::uint64_t d = min_d; d <= options.search_bound; ++d) {
      const int already = d == min_d ? used_of_min : 0;
      if (already >= options.max_multiplicity) continue;
      const std::uint64_t deg = euler_phi(d);
      if (deg > remaining) continue;
      orders.push_back(d);
      for (std::size_t n = 1; n <= N; ++n) gained[n - 1] += contribution(d, n);
      if (search(d, remaining - deg, already + 1)) return true;
      for (std::size_t n = 1; n <= N; ++n) gained[n - 1] -= contribution(d, n);
      orders.pop_back();
    }
    return false;
  };
  for (std::uint64_t total = 0; total <= max_total; ++total) {
    if (search(1, total, 0)) {
      Padding out;
      out.phi = IntPoly(1);
      for (auto d : orders) out.phi = out.phi * cyclotomic(d);
      out.orders = orders;
      return out;
    }
  }
  return std::nullopt;
}

bool primitivity(const IntMatrix& a) {
  require_square(a, "primitivity");
  const Eigen::Index m = a.rows();
  using BoolMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
  BoolMatrix pattern(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      if (a(i, j) < 0) throw DomainError("primitivity: entries must be nonnegative");
      pattern(i, j) = a(i, j) > 0 ? 1 : 0;
    }
  const long bound = (m - 1) * (m - 1) + 1;
  BoolMatrix power = pattern;
  for (long n = 1; n <= bound; ++n) {
    if ((power.array() > 0).all()) return true;
    power = (power * pattern).unaryExpr([](int v) { return v > 0 ? 1 : 0; });
  }
  return false;
}

bool verify_kor_instance(const IntMatrix& a, const IntPoly& p, const IntPoly& phi) {
  if (!primitivity(a)) return false;
  const IntPoly target = p * phi;
  const IntPoly chi = char_poly(a);
  if (target.is_zero() || chi.degree() < target.degree()) return false;
  const auto ell = static_cast<std::size_t>(chi.degree() - target.degree());
  return chi == IntPoly::monomial(BigInt(1), ell) * target;
}

}  // namespace lehmer
