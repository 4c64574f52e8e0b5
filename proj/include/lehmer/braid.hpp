#pragma once

#include "lehmer/freegroup.hpp"
#include "lehmer/laurent.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/roots.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace lehmer {

/// Word in the Artin generators of B_n; letter i > 0 is sigma_i, -i its
/// inverse. `full_twist_power` k appends the central factor Delta_n^{2k}.
struct BraidWord {
  std::size_t n = 2;
  std::vector<int> letters;
  long full_twist_power = 0;

  /// Letters with the full-twist factor written out.
  std::vector<int> expanded() const;
  /// Throws DomainError on n < 2 or an out-of-range letter.
  void validate() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

using BurauMat = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

/// "s1 s2^-1 T^2", "1 -2", "s1^3". Throws ParseError, DomainError on range.
BraidWord parse_braid(std::string_view text, std::size_t n);
std::string format_braid(const BraidWord& b);

BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);

/// Reduced Burau matrix of sigma_i^{+-1} in B_n.
BurauMat burau_generator(std::size_t n, int letter);
BurauMat reduced_burau(const BraidWord& b);

LaurentPoly det_burau_minus_identity(const BraidWord& b);

/// det(B - I) / (1 + t + ... + t^{n-1}) in canonical form. DomainError on a
/// zero determinant, ConsistencyError if the division is not exact.
LaurentPoly reduced_alexander(const BraidWord& b);

/// Mahler measure of det(B - I). DomainError on a zero determinant.
MahlerMeasure lehmer_gap(const BraidWord& b, double tol = kDefaultTolerance);

/// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
Endo artin_generator(std::size_t n, int letter);
/// Product of the letter actions, first letter outermost.
Endo artin_endo(const BraidWord& b, std::size_t run_cap = kDefaultRunCap);

struct EntropyEstimate {
  double gr1 = 0.0;      ///< aitken if accelerated, else ratio
  double log_gr1 = 0.0;
  double ratio = 0.0;    ///< last length ratio a_N / a_{N-1}
  double aitken = 0.0;   ///< Aitken delta^2 on the last three ratios
  double spread = 0.0;   ///< max - min of the last three ratios
  double root = 0.0;     ///< a_N^{1/N}
  std::uint32_t generator = 1;          ///< generator attaining the maximum
  std::vector<double> ratios;           ///< ratios for that generator, n = 2..N
  std::vector<double> spreads;          ///< trailing three-ratio spread at n = 4..N
  /// Max spread over consecutive blocks of four trailing spreads, oldest first.
  std::vector<double> block_spreads;
  bool narrowing = false;               ///< block_spreads strictly decreasing
  std::vector<double> per_generator;    ///< last ratio of each generator
  std::size_t iterations = 0;
};

/// GR^(1) of the Artin action by length ratios over n <= N. N >= 4.
EntropyEstimate entropy_estimate(const BraidWord& b, std::size_t N, bool accel = true,
                                 std::size_t run_cap = kDefaultRunCap);

}  // namespace lehmer
