#pragma once

#include "lehmer/poly.hpp"
#include "lehmer/roots.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lehmer {

/// Finite prefix a_1..a_N of an exact rational sequence. Indexing is 1-based.
class ExactSeq {
 public:
  ExactSeq() = default;
  explicit ExactSeq(std::vector<BigRat> terms) : terms_(std::move(terms)) {}
  static ExactSeq from_integers(const std::vector<BigInt>& terms);
  static ExactSeq from_integers(std::initializer_list<long> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// a_n for 1 <= n <= size().
  const BigRat& operator()(std::size_t n) const { return terms_.at(n - 1); }
  const std::vector<BigRat>& terms() const { return terms_; }
  bool is_integral() const;

  ExactSeq operator-(const ExactSeq& other) const;
  ExactSeq operator+(const ExactSeq& other) const;
  /// First n terms.
  ExactSeq prefix(std::size_t n) const;

  friend bool operator==(const ExactSeq&, const ExactSeq&) = default;

 private:
  std::vector<BigRat> terms_;
};

/// a_{n+d} + c_{d-1} a_{n+d-1} + ... + c_0 a_n = 0 with monic characteristic
/// polynomial t^d + c_{d-1} t^{d-1} + ... + c_0. `init` holds a_offset ..
/// a_{offset+d-1}; `offset` is 1 for the usual 1-indexed sequences and 0 for
/// generating-function conventions that start at a_0.
struct Recurrence {
  IntPoly char_poly;
  std::vector<BigRat> init;
  std::size_t offset = 1;

  std::size_t degree() const { return static_cast<std::size_t>(char_poly.degree()); }
};

/// k x k Hankel determinant with entries a_{n+i+j-2}, 1 <= i, j <= k.
/// Requires n >= 1, k >= 1 and n + 2k - 2 <= N; throws DomainError otherwise.
BigRat hankel_det(const ExactSeq& a, std::size_t n, std::size_t k);

/// Finite-window estimate of limsup |H_{n,k}|^{1/n}.
struct GrowthEstimate {
  double value = 0.0;       ///< max over the window
  double window_min = 0.0;  ///< spread of |H_{n,k}|^{1/n} inside the window
  double window_max = 0.0;
  std::size_t first_n = 0;
  std::size_t last_n = 0;
};

inline constexpr std::size_t kDefaultWindow = 8;

/// Max of |H_{n,k}|^{1/n} over the last `window` admissible n; zero when every
/// tail determinant vanishes. Throws DomainError when fewer than `window`
/// admissible n exist.
GrowthEstimate growth_rate(const ExactSeq& a, std::size_t k, std::size_t window = kDefaultWindow);

/// Least-degree monic recurrence satisfied by every supplied term, found by an
/// exact Berlekamp-Massey scan over Q. Requires N >= 2 d_max + margin (margin
/// defaults to d_max) and throws DomainError otherwise; nullopt when no
/// recurrence of degree <= d_max fits. A minimal polynomial with non-integral
/// coefficients (possible only for non-integer sequences) also yields nullopt.
std::optional<Recurrence> fit_min_poly(const ExactSeq& a, std::size_t d_max,
                                       std::optional<std::size_t> margin = std::nullopt);

/// The largest d_max for which fit_min_poly's length requirement holds.
std::size_t max_fit_degree(std::size_t length);

struct MaxGrowth {
  double value = 0.0;
  double error_bound = 0.0;
  IntPoly min_poly;
};

/// max_k GR^(k)(a) computed exactly as M(minimal polynomial). Throws
/// DomainError when no recurrence of degree <= d_max is found.
MaxGrowth max_growth_exact(const ExactSeq& a, std::size_t d_max, double tol = kDefaultTolerance);

/// GR^(k) for k = 0..k_max from a minimal polynomial: the product of the k
/// largest root moduli among the nonzero roots, and 0 beyond their count.
std::vector<double> exact_growth_rates(const IntPoly& min_poly, std::size_t k_max,
                                       double tol = kDefaultTolerance);

/// Exact forward iteration; throws DomainError when N < degree.
ExactSeq seq_from_recurrence(const Recurrence& r, std::size_t N);

struct TailEquivalence {
  std::vector<CertifiedRoot> outside_roots_a;
  std::vector<CertifiedRoot> outside_roots_b;
  bool agree = false;
};

/// Compares the roots of modulus > 1 (with multiplicity) of both minimal
/// polynomials. Throws DomainError when either fit fails.
TailEquivalence tail_equivalence(const ExactSeq& a, const ExactSeq& b, std::size_t d_max,
                                 double tol = kDefaultTolerance);

struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

/// Least period, then least preperiod, with at least three full periods of
/// evidence after the preperiod. Throws DomainError on non-integer terms.
std::optional<Periodicity> eventually_periodic(const ExactSeq& a);

struct GrowthEntry {
  std::size_t k = 0;
  /// Windowed Hankel estimate; absent when the prefix is too short for it.
  std::optional<double> estimate;
  std::optional<double> exact;
  double window_min = 0.0;
  double window_max = 0.0;
  std::size_t first_n = 0;
  std::size_t last_n = 0;

  /// Exact value when available, otherwise the windowed estimate.
  double value() const { return exact ? *exact : estimate.value_or(0.0); }
};

struct GrowthReport {
  std::vector<GrowthEntry> entries;  ///< entries[k] is GR^(k); GR^(0) == 1
  std::optional<IntPoly> min_poly;
  std::size_t window = kDefaultWindow;

  double max_growth() const;
};

/// Per-k growth rates for k <= k_max. Uses the exact route through the
/// minimal polynomial when a recurrence is detected and always reports the
/// windowed Hankel estimate when enough terms exist for it. Throws DomainError
/// when neither route is available for some k.
GrowthReport growth_report(const ExactSeq& a, std::size_t k_max, std::size_t window = kDefaultWindow,
                           double tol = kDefaultTolerance);

/// Comma-separated integers or rationals ("1,1,2,3" or "1/2,3/4").
ExactSeq parse_seq(std::string_view text);
std::string format_seq(const ExactSeq& a);

/// "charpoly;init" where both halves use the comma forms, e.g. "-1,-1,1;1,1".
Recurrence parse_recurrence(std::string_view text);

}  // namespace lehmer
