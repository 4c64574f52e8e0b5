#include "lehmer/roots.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lehmer {

namespace {

using Complex50 = boost::multiprecision::cpp_complex_50;
using Real50 = boost::multiprecision::cpp_bin_float_50;

template <typename Real>
Real from_bigint(const BigInt& x);

template <>
long double from_bigint<long double>(const BigInt& x) {
  return to_long_double(x);
}

template <>
Real50 from_bigint<Real50>(const BigInt& x) {
  return Real50(x.str());
}

/// Approximations for one squarefree polynomial at working precision `Real`.
template <typename Real, typename Complex>
class AberthSolver {
 public:
  explicit AberthSolver(const IntPoly& f) : degree_(static_cast<std::size_t>(f.degree())) {
    coeffs_.reserve(f.size());
    abs_coeffs_.reserve(f.size());
    for (const auto& c : f.coeffs()) {
      coeffs_.push_back(from_bigint<Real>(c));
      abs_coeffs_.push_back(from_bigint<Real>(abs(c)));
    }
  }

  void refine(std::vector<Complex>& z, int max_iterations) const {
    const Real stop = std::numeric_limits<Real>::epsilon() * 4;
    for (int it = 0; it < max_iterations; ++it) {
      Real largest_step = 0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        auto [p, dp] = eval_with_derivative(z[i]);
        if (abs_of(p) == 0) continue;
        Complex ratio = p / dp;
        Complex repulsion(0);
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
        Complex step = ratio / (Complex(1) - ratio * repulsion);
        z[i] -= step;
        const Real scale = std::max(Real(1), abs_of(z[i]));
        largest_step = std::max(largest_step, Real(abs_of(step) / scale));
      }
      if (largest_step < stop) break;
    }
  }

  /// Inclusion radius n|W_i| inflated for evaluation round-off.
  std::vector<Real> inclusion_radii(const std::vector<Complex>& z) const {
    const Real unit = std::numeric_limits<Real>::epsilon() / 2;
    const Real gamma = unit * Real(2 * degree_ + 2) * Real(1.01);
    const Real lead = abs_of_real(coeffs_.back());
    std::vector<Real> radii(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Real zabs = abs_of(z[i]);
      Real bound = 0;
      for (auto it = abs_coeffs_.rbegin(); it != abs_coeffs_.rend(); ++it) bound = bound * zabs + *it;
      const Real residual = abs_of(eval(z[i])) + gamma * bound;
      Real denom = lead;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= abs_of(z[i] - z[j]);
      if (denom == 0) {
        radii[i] = std::numeric_limits<Real>::infinity();
        continue;
      }
      radii[i] = Real(degree_) * residual / denom * Real(1.0001);
    }
    return radii;
  }

 private:
  static Real abs_of(const Complex& c) {
    using std::abs;
    return Real(abs(c));
  }
  static Real abs_of_real(const Real& r) { return r < 0 ? Real(-r) : r; }

  Complex eval(const Complex& x) const {
    Complex acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Complex(*it);
    return acc;
  }

  std::pair<Complex, Complex> eval_with_derivative(const Complex& x) const {
    Complex p(0), dp(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      dp = dp * x + p;
      p = p * x + Complex(*it);
    }
    return {p, dp};
  }

  std::size_t degree_;
  std::vector<Real> coeffs_;
  std::vector<Real> abs_coeffs_;
};

std::vector<std::complex<double>> initial_guesses(const IntPoly& f) {
  const long n = f.degree();
  std::vector<std::complex<double>> z;
  const double lead = to_long_double(f.leading());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (long i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  bool finite = true;
  for (long i = 0; i < n; ++i) {
    companion(i, n - 1) = -static_cast<double>(to_long_double(f[static_cast<std::size_t>(i)])) / lead;
    finite = finite && std::isfinite(companion(i, n - 1));
  }
  if (finite) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() == Eigen::Success) {
      for (long i = 0; i < n; ++i) z.push_back(solver.eigenvalues()(i));
      // Exactly coincident starting points stall the Aberth update.
      bool distinct = true;
      for (std::size_t i = 0; i < z.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
          if (z[i] == z[j]) distinct = false;
      if (distinct) return z;
    }
  }
  // Fall back to a perturbed circle through the Cauchy bound.
  double radius = 0.0;
  for (long i = 0; i < n; ++i)
    radius = std::max(radius, std::fabs(static_cast<double>(to_long_double(f[static_cast<std::size_t>(i)]) / lead)));
  radius = 1.0 + radius;
  z.clear();
  for (long k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.push_back(std::polar(radius * 0.5, angle));
  }
  return z;
}

bool disks_disjoint(const std::vector<CertifiedRoot>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i].value - roots[j].value) <= roots[i].radius + roots[j].radius) return false;
  return true;
}

template <typename Real, typename Complex>
std::vector<CertifiedRoot> certify(const std::vector<Complex>& z, const std::vector<Real>& radii,
                                   int multiplicity) {
  std::vector<CertifiedRoot> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::complex<double> v(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
    // Rounding the approximation to double moves it by at most one ulp per component.
    const double rounding = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
    const double r = static_cast<double>(radii[i]) + rounding;
    out.push_back({v, r, multiplicity});
  }
  return out;
}

bool within(const std::vector<CertifiedRoot>& roots, double tol) {
  return std::all_of(roots.begin(), roots.end(), [&](const CertifiedRoot& r) { return r.radius <= tol; });
}

std::vector<CertifiedRoot> solve_squarefree(const IntPoly& f, int multiplicity, double tol) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const auto guesses = initial_guesses(f);

  std::vector<std::complex<long double>> z(guesses.begin(), guesses.end());
  AberthSolver<long double, std::complex<long double>> solver(f);
  solver.refine(z, 200 + static_cast<int>(20 * n));
  auto radii = solver.inclusion_radii(z);
  auto out = certify(z, radii, multiplicity);
  if (within(out, tol) && disks_disjoint(out)) return out;

  // Escalate to 50 decimal digits starting from the long double approximations.
  std::vector<Complex50> zz;
  zz.reserve(n);
  for (const auto& c : z) zz.emplace_back(Real50(c.real()), Real50(c.imag()));
  AberthSolver<Real50, Complex50> precise(f);
  precise.refine(zz, 400 + static_cast<int>(40 * n));
  auto radii50 = precise.inclusion_radii(zz);
  out = certify(zz, radii50, multiplicity);
  if (within(out, tol) && disks_disjoint(out)) return out;
  throw PrecisionError("could not certify roots of a degree " + std::to_string(n) +
                       " factor within tolerance " + std::to_string(tol));
}

}  // namespace

std::size_t RootList::degree() const {
  std::size_t d = 0;
  for (const auto& r : roots) d += static_cast<std::size_t>(r.multiplicity);
  return d;
}

std::vector<std::complex<double>> RootList::expanded() const {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

RootList roots(const IntPoly& f, double tol) {
  if (f.degree() < 1) throw DomainError("roots: polynomial must have degree >= 1");
  if (!(tol > 0)) throw DomainError("roots: tolerance must be positive");
  RootList list;
  const std::size_t zero_mult = f.valuation();
  if (zero_mult > 0) list.roots.push_back({{0.0, 0.0}, 0.0, static_cast<int>(zero_mult)});
  const IntPoly core = f.strip_t();
  for (const auto& [part, mult] : squarefree_decomposition(core)) {
    auto found = solve_squarefree(part, mult, tol);
    list.roots.insert(list.roots.end(), found.begin(), found.end());
  }
  if (!disks_disjoint(list.roots))
    throw PrecisionError("roots: inclusion disks of distinct factors overlap at tolerance " +
                         std::to_string(tol));
  for (const auto& r : list.roots) list.radius = std::max(list.radius, r.radius);
  std::sort(list.roots.begin(), list.roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) > std::abs(b.value);
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return list;
}

MahlerMeasure mahler_measure(const IntPoly& f, double tol) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  MahlerMeasure m;
  const long double lead = std::fabs(to_long_double(f.leading()));
  if (f.degree() == 0) {
    m.value = static_cast<double>(lead);
    m.exact = true;
    return m;
  }
  m.roots = roots(f, tol);
  long double value = lead, upper = lead, lower = lead;
  m.exact = true;
  for (const auto& r : m.roots.roots) {
    const long double mod = std::abs(std::complex<long double>(r.value));
    const long double rad = r.radius;
    if (std::fabs(mod - 1.0L) <= rad) m.exact = false;
    for (int k = 0; k < r.multiplicity; ++k) {
      value *= std::max(mod, 1.0L);
      upper *= std::max(mod + rad, 1.0L);
      lower *= std::max(mod - rad, 1.0L);
    }
  }
  const long double rounding = value * static_cast<long double>(f.degree() + 2) *
                               std::numeric_limits<double>::epsilon();
  m.value = static_cast<double>(value);
  m.error_bound = static_cast<double>(std::max(upper - value, value - lower) + rounding);
  return m;
}

MahlerMeasure mahler_measure(const LaurentPoly& f, double tol) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  return mahler_measure(f.body(), tol);
}

std::vector<CertifiedRoot> roots_outside_unit_circle(const RootList& roots) {
  std::vector<CertifiedRoot> out;
  for (const auto& r : roots.roots)
    if (std::abs(r.value) - r.radius > 1.0) out.push_back(r);
  return out;
}

}  // namespace lehmer
