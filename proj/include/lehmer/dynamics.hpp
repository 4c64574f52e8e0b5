#pragma once

#include "lehmer/poly.hpp"
#include "lehmer/roots.hpp"
#include "lehmer/sequence.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace lehmer {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using PolyMatrix = Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix identity_matrix(Eigen::Index m);

/// Builds a matrix from rows; throws DomainError unless square and nonempty.
IntMatrix int_matrix(const std::vector<std::vector<BigInt>>& rows);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);

IntMatrix matrix_power(const IntMatrix& a, unsigned n);

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// -c_0 .. -c_{d-1} in the last column, so that det(tI - C) = f.
IntMatrix companion(const IntPoly& f);

/// det(tI - A) by fraction-free elimination over Z[t]; monic of degree m.
IntPoly char_poly(const IntMatrix& a);

/// tr A, tr A^2, ..., tr A^N.
ExactSeq trace_powers(const IntMatrix& a, std::size_t N);

/// L_n = 1 - tr A^n with boundary, 2 - tr A^n without.
ExactSeq lefschetz_seq(const IntMatrix& a, bool has_boundary, std::size_t N);

/// F_n = sum_i sign_i * tr A_i^n.
struct SignedShiftSystem {
  struct Block {
    int sign = 1;
    IntMatrix matrix;
  };
  std::vector<Block> blocks;
};

ExactSeq signed_trace_seq(const SignedShiftSystem& s, std::size_t N);

int moebius(std::uint64_t n);

/// Power sums p_1..p_N of the roots of a monic f (with multiplicity) from
/// Newton's identities; exact.
std::vector<BigInt> power_sums(const IntPoly& f, std::size_t N);

/// n-th net trace sum_{k|n} mu(n/k) tr(Lambda^k) for the roots of monic f.
BigInt net_trace(const IntPoly& f, std::uint64_t n);
/// Net traces for n = 1..N.
std::vector<BigInt> net_traces(const IntPoly& f, std::size_t N);
/// Floating-point net trace of an explicit tuple (real part of the sum).
double net_trace(const std::vector<std::complex<double>>& lambda, std::uint64_t n);

struct PerronReport {
  bool integer_coeffs = true;
  bool dominant_real = false;
  /// Net traces of the nonzero roots are >= 0 for n = 1..checked_up_to only.
  bool net_traces_ok = false;
  std::size_t checked_up_to = 0;
  std::optional<std::size_t> first_negative;
  std::optional<double> dominant_root;
  bool is_perron_candidate = false;
};

/// The three spectral conditions for a monic f; the zero roots t^l are
/// ignored. Condition (3) is verified on a finite prefix only.
PerronReport perron_check(const IntPoly& f, std::size_t n_net = 50, double tol = kDefaultTolerance);

struct PaddingOptions {
  std::size_t n_net = 50;
  std::uint64_t search_bound = 30;  ///< largest cyclotomic order tried
  int max_multiplicity = 2;
};

struct Padding {
  IntPoly phi;
  std::vector<std::uint64_t> orders;  ///< ascending, with repetition
};

/// First product of cyclotomic polynomials Phi (by total degree, then
/// lexicographic in the ascending order list) making every net trace of f*Phi
/// nonnegative for n = 1..n_net. nullopt when the bounded search fails.
/// Throws DomainError when f fails the dominant-root condition.
std::optional<Padding> cyclotomic_padding(const IntPoly& f, const PaddingOptions& options = {});

/// A^N > 0 entrywise for some N <= (m-1)^2 + 1. Throws DomainError on
/// negative entries.
bool primitivity(const IntMatrix& a);

/// primitivity(A) and char_poly(A) == t^l * p * phi for some l >= 0.
bool verify_kor_instance(const IntMatrix& a, const IntPoly& p, const IntPoly& phi);

}  // namespace lehmer
