#pragma once

#include "lehmer/poly.hpp"
#include "lehmer/sequence.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testsupport {

inline lehmer::IntPoly P(std::initializer_list<long> c) {
  std::vector<lehmer::BigInt> v;
  for (long x : c) v.emplace_back(x);
  return lehmer::IntPoly(std::move(v));
}

inline lehmer::BigInt pow_int(long base, unsigned e) {
  return boost::multiprecision::pow(lehmer::BigInt(base), e);
}

/// a_n = f(n) for n = 1..N.
template <typename F>
lehmer::ExactSeq tabulate(std::size_t N, F f) {
  std::vector<lehmer::BigRat> v;
  for (std::size_t n = 1; n <= N; ++n) v.emplace_back(f(static_cast<unsigned>(n)));
  return lehmer::ExactSeq(std::move(v));
}

inline lehmer::IntPoly random_monic(std::mt19937& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<lehmer::BigInt> v;
  for (int i = 0; i < degree; ++i) v.emplace_back(coef(rng));
  v.emplace_back(1);
  return lehmer::IntPoly(std::move(v));
}

/// Random recurrence with degree in [1, max_degree].
inline lehmer::Recurrence random_recurrence(std::mt19937& rng, int max_degree, int coef_bound, int init_bound) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<int> init(-init_bound, init_bound);
  lehmer::Recurrence r;
  const int d = deg(rng);
  r.char_poly = random_monic(rng, d, coef_bound);
  for (int i = 0; i < d; ++i) r.init.emplace_back(init(rng));
  return r;
}

}  // namespace testsupport
