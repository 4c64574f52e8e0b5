#pragma once

#include "lehmer/laurent.hpp"
#include "lehmer/poly.hpp"

#include <complex>
#include <vector>

namespace lehmer {

inline constexpr double kDefaultTolerance = 1e-10;

/// One distinct root with its multiplicity. The true root lies in the closed
/// disk of the given radius about `value`, and that disk contains no other
/// root of the polynomial.
struct CertifiedRoot {
  std::complex<double> value;
  double radius = 0.0;
  int multiplicity = 1;
};

/// Certified approximations to every root of a polynomial.
struct RootList {
  std::vector<CertifiedRoot> roots;
  /// Largest per-root radius; never exceeds the requested tolerance.
  double radius = 0.0;

  /// Number of roots counted with multiplicity.
  std::size_t degree() const;
  /// Approximations repeated by multiplicity.
  std::vector<std::complex<double>> expanded() const;
};

/// Certified roots of f (degree >= 1). Repeated roots are separated exactly by
/// a squarefree decomposition first; each squarefree part is solved with
/// companion-matrix initialization and Aberth refinement, then certified with
/// Weierstrass-correction inclusion disks. Throws PrecisionError when the
/// disks cannot be brought below `tol` and made pairwise disjoint.
RootList roots(const IntPoly& f, double tol = kDefaultTolerance);

struct MahlerMeasure {
  double value = 0.0;
  /// Absolute bound on |value - M(f)| from the root radii.
  double error_bound = 0.0;
  /// True when every root is certified off the unit circle.
  bool exact = false;
  RootList roots;
};

/// M(f) = |lead| * prod max(|r|, 1). Throws DomainError for f == 0.
MahlerMeasure mahler_measure(const IntPoly& f, double tol = kDefaultTolerance);

/// Mahler measure of a Laurent polynomial; the monomial factor contributes nothing.
MahlerMeasure mahler_measure(const LaurentPoly& f, double tol = kDefaultTolerance);

/// Roots of modulus certainly greater than one, with multiplicity.
std::vector<CertifiedRoot> roots_outside_unit_circle(const RootList& roots);

}  // namespace lehmer
