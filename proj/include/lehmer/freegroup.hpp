#pragma once

#include "lehmer/dynamics.hpp"
#include "lehmer/sequence.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lehmer {

/// Run exponents. cpp_int keeps small values inline, which matters for words
/// with millions of runs.
using Exponent = boost::multiprecision::cpp_int;

struct Run {
  std::uint32_t gen = 1;  ///< 1-based generator index
  Exponent exp = 1;
  friend bool operator==(const Run&, const Run&) = default;
};

inline constexpr std::size_t kDefaultRunCap = 10'000'000;

/// Freely reduced word in F_m, stored as runs g_i^e.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  /// g_i^e in F_rank.
  static Word generator(std::size_t rank, std::uint32_t i, const Exponent& e = 1);
  /// Reduces an arbitrary run list (zero exponents, adjacent equal generators).
  static Word from_runs(std::size_t rank, const std::vector<Run>& runs);

  std::size_t rank() const { return rank_; }
  const std::vector<Run>& runs() const { return runs_; }
  std::size_t run_count() const { return runs_.size(); }
  bool empty() const { return runs_.empty(); }
  /// Sum of |exponents|.
  BigInt length() const;
  /// Total exponent of g_i (signed).
  BigInt exponent_sum(std::uint32_t i) const;
  /// Number of letters g_i^{+1} or g_i^{-1}.
  BigInt occurrences(std::uint32_t i) const;
  bool is_positive() const;

  Word inverse() const;
  /// Concatenation followed by free reduction at the seam.
  Word operator*(const Word& other) const;
  /// w^k for any integer k. Throws BudgetError past `run_cap` runs.
  Word pow(const Exponent& k, std::size_t run_cap = kDefaultRunCap) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend struct WordAccess;
  std::size_t rank_ = 0;
  std::vector<Run> runs_;
};

/// Free reduction of a raw run list.
Word reduce(std::size_t rank, const std::vector<Run>& raw);

/// Endomorphism of F_m given by the images of g_1..g_m.
class Endo {
 public:
  Endo() = default;
  explicit Endo(std::vector<Word> images);
  static Endo identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::uint32_t i) const { return images_.at(i - 1); }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  std::vector<Word> images_;
};

/// phi(w). Throws DomainError on rank mismatch and BudgetError past `run_cap`.
Word apply(const Endo& phi, const Word& w, std::size_t run_cap = kDefaultRunCap);

/// (phi o psi)(g) = phi(psi(g)).
Endo compose(const Endo& phi, const Endo& psi, std::size_t run_cap = kDefaultRunCap);

/// |phi^n(w)| for n = 1..N.
ExactSeq iterate_lengths(const Endo& phi, const Word& w, std::size_t N, std::size_t run_cap = kDefaultRunCap);

struct EndoGrowthReport {
  std::vector<std::string> basis;               ///< generator names
  std::vector<GrowthReport> per_generator;      ///< one report per generator
  std::vector<double> maxima;                   ///< maxima[k] = max_i GR^(k)
  std::size_t iterations = 0;
};

struct GrowthOptions {
  std::size_t iterations = 20;  ///< N
  std::size_t window = kDefaultWindow;
  double tol = kDefaultTolerance;
  std::size_t run_cap = kDefaultRunCap;
};

/// GR^(k)(phi) for k <= k_max with respect to the standard generators.
EndoGrowthReport growth_report(const Endo& phi, std::size_t k_max, const GrowthOptions& options = {});

/// Growth rates of the summed sequence sum_i |phi^n(g_i)|.
GrowthReport growth_report_sum(const Endo& phi, std::size_t k_max, const GrowthOptions& options = {});

/// g_i -> g_1^{a_i1} ... g_m^{a_im}. Throws DomainError on negative entries.
Endo endo_from_matrix(const IntMatrix& a);

/// Column j is the exponent-sum vector of phi(g_j).
IntMatrix abelianization(const Endo& phi);

struct F2Descent {
  Endo phi;
  /// Generators were exchanged to reach the normalization; phi is already
  /// conjugated back.
  bool swapped = false;
  std::vector<BigInt> d;                        ///< d_1 .. d_{n-1}
  std::vector<std::pair<BigInt, BigInt>> columns;  ///< (p_k, q_k), k = 0..n
};

/// Positive automorphism of F_2 abelianizing to A by the continued-fraction
/// descent. Requires nonnegative entries and det A = +-1.
F2Descent positive_f2_aut(const IntMatrix& a);

/// Greedy length-reducing Nielsen moves on (u, v); true when they end at a
/// pair of distinct generators (up to inversion).
bool nielsen_verify_basis(const Word& u, const Word& v);

/// "a^3 b^-2 a" or "g1^3 g2^-2"; "1" is the empty word. `rank` 0 infers the
/// rank from the largest generator used. Throws ParseError.
Word parse_word(std::string_view text, std::size_t rank = 0);
std::string format_word(const Word& w);

/// "a -> a b a; b -> a b". Generators must be listed exactly once each.
Endo parse_endo(std::string_view text);
std::string format_endo(const Endo& phi);

/// "a".."z" for ranks up to 26, "g<i>" beyond.
std::string generator_name(std::size_t rank, std::uint32_t i);

}  // namespace lehmer
