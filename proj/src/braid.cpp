#include "lehmer/braid.hpp"

#include "lehmer/bareiss.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace lehmer {

namespace {

const LaurentPoly kT = LaurentPoly::monomial(1, 1);
const LaurentPoly kTinv = LaurentPoly::monomial(1, -1);

long parse_exponent(std::string_view text, const std::string& token) {
  std::string s(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  try {
    return parse_integer(s).convert_to<long>();
  } catch (const ParseError&) {
    throw ParseError("bad exponent in braid token '" + token + "'");
  }
}

void append_power(std::vector<int>& out, int letter, long e) {
  const int signed_letter = e < 0 ? -letter : letter;
  for (long j = 0; j < std::labs(e); ++j) out.push_back(signed_letter);
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

}  // namespace

std::vector<int> BraidWord::expanded() const {
  std::vector<int> out = letters;
  std::vector<int> twist;
  for (std::size_t rep = 0; rep < n; ++rep)
    for (int i = static_cast<int>(n) - 1; i >= 1; --i) twist.push_back(i);
  for (long k = 0; k < std::labs(full_twist_power); ++k) {
    if (full_twist_power > 0) {
      out.insert(out.end(), twist.begin(), twist.end());
    } else {
      for (auto it = twist.rbegin(); it != twist.rend(); ++it) out.push_back(-*it);
    }
  }
  return out;
}

void BraidWord::validate() const {
  if (n < 2) throw DomainError("braid: strand count must be at least 2");
  for (int l : letters)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > n - 1)
      throw DomainError("braid: generator index " + std::to_string(l) + " out of range for B_" + std::to_string(n));
}

BraidWord parse_braid(std::string_view text, std::size_t n) {
  BraidWord b;
  b.n = n;
  for (const auto& token : split_tokens(text)) {
    std::string_view body = token;
    std::string_view exp;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      exp = body.substr(caret + 1);
      body = body.substr(0, caret);
      if (exp.empty()) throw ParseError("missing exponent in braid token '" + token + "'");
    }
    const long e = exp.empty() ? 1 : parse_exponent(exp, token);
    if (body == "T" || body == "D" || body == "Delta2") {
      b.full_twist_power += e;
    } else if (!body.empty() && (body[0] == 's' || body[0] == 'S')) {
      const auto digits = body.substr(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed braid token '" + token + "'");
      append_power(b.letters, std::stoi(std::string(digits)), e);
    } else {
      long v = 0;
      try {
        v = parse_integer(body).convert_to<long>();
      } catch (const ParseError&) {
        throw ParseError("malformed braid token '" + token + "'");
      }
      if (v == 0) throw ParseError("braid letter 0 in token '" + token + "'");
      append_power(b.letters, static_cast<int>(std::labs(v)), v < 0 ? -e : e);
    }
  }
  b.validate();
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream out;
  bool first = true;
  for (int l : b.letters) {
    if (!first) out << ' ';
    first = false;
    out << 's' << std::abs(l);
    if (l < 0) out << "^-1";
  }
  if (b.full_twist_power != 0) {
    if (!first) out << ' ';
    first = false;
    out << 'T';
    if (b.full_twist_power != 1) out << '^' << b.full_twist_power;
  }
  return first ? "1" : out.str();
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw DomainError("braid product: strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.full_twist_power += b.full_twist_power;
  return out;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord out;
  out.n = b.n;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  out.full_twist_power = -b.full_twist_power;
  return out;
}

BurauMat burau_generator(std::size_t n, int letter) {
  if (n < 2 || letter == 0 || static_cast<std::size_t>(std::abs(letter)) > n - 1)
    throw DomainError("burau_generator: letter out of range");
  const long m = static_cast<long>(n) - 1;
  // 3x3 block on rows/cols i-2 .. i (0-based), clipped to the matrix.
  LaurentPoly block[3][3];
  if (letter > 0) {
    const LaurentPoly b[3][3] = {{1, kT, 0}, {0, -kT, 0}, {0, 1, 1}};
    std::copy(&b[0][0], &b[0][0] + 9, &block[0][0]);
  } else {
    const LaurentPoly b[3][3] = {{1, 1, 0}, {0, -kTinv, 0}, {0, kTinv, 1}};
    std::copy(&b[0][0], &b[0][0] + 9, &block[0][0]);
  }
  BurauMat g = BurauMat::Identity(m, m);
  const long base = std::abs(letter) - 2;
  for (long r = 0; r < 3; ++r)
    for (long c = 0; c < 3; ++c) {
      const long i = base + r, j = base + c;
      if (i >= 0 && i < m && j >= 0 && j < m) g(i, j) = block[r][c];
    }
  return g;
}

BurauMat reduced_burau(const BraidWord& b) {
  b.validate();
  const long m = static_cast<long>(b.n) - 1;
  BurauMat acc = BurauMat::Identity(m, m);
  for (int l : b.expanded()) acc = (acc * burau_generator(b.n, l)).eval();
  return acc;
}

LaurentPoly det_burau_minus_identity(const BraidWord& b) {
  const BurauMat m = reduced_burau(b);
  const BurauMat shifted = m - BurauMat::Identity(m.rows(), m.cols());
  return bareiss_determinant(shifted);
}

LaurentPoly reduced_alexander(const BraidWord& b) {
  const LaurentPoly det = det_burau_minus_identity(b);
  if (det.is_zero()) throw DomainError("reduced_alexander: det(B - I) vanishes");
  const LaurentPoly divisor(std::vector<BigInt>(b.n, BigInt(1)), 0);
  try {
    return exact_div(det, divisor).canonical();
  } catch (const DomainError&) {
    throw ConsistencyError("reduced_alexander: det(B - I) not divisible by 1 + t + ... + t^(n-1)");
  }
}

MahlerMeasure lehmer_gap(const BraidWord& b, double tol) {
  const LaurentPoly det = det_burau_minus_identity(b);
  if (det.is_zero()) throw DomainError("lehmer_gap: det(B - I) vanishes");
  return mahler_measure(det, tol);
}

Endo artin_generator(std::size_t n, int letter) {
  if (n < 2 || letter == 0 || static_cast<std::size_t>(std::abs(letter)) > n - 1)
    throw DomainError("artin_generator: letter out of range");
  const auto i = static_cast<std::uint32_t>(std::abs(letter));
  const Word xi = Word::generator(n, i), xj = Word::generator(n, i + 1);
  std::vector<Word> images = Endo::identity(n).images();
  if (letter > 0) {
    images[i - 1] = xi * xj * xi.inverse();
    images[i] = xi;
  } else {
    images[i - 1] = xj;
    images[i] = xj.inverse() * xi * xj;
  }
  return Endo(std::move(images));
}

Endo artin_endo(const BraidWord& b, std::size_t run_cap) {
  b.validate();
  Endo acc = Endo::identity(b.n);
  for (int l : b.expanded()) acc = compose(acc, artin_generator(b.n, l), run_cap);
  return acc;
}

EntropyEstimate entropy_estimate(const BraidWord& b, std::size_t N, bool accel, std::size_t run_cap) {
  if (N < 4) throw DomainError("entropy_estimate: N must be at least 4");
  const Endo phi = artin_endo(b, run_cap);

  EntropyEstimate est;
  est.iterations = N;
  BigInt best_length = -1;
  std::vector<BigInt> best;
  for (std::uint32_t g = 1; g <= b.n; ++g) {
    std::vector<BigInt> lengths{1};
    Word w = Word::generator(b.n, g);
    for (std::size_t k = 1; k <= N; ++k) {
      w = apply(phi, w, run_cap);
      lengths.push_back(w.length());
    }
    est.per_generator.push_back(lengths[N].convert_to<double>() / lengths[N - 1].convert_to<double>());
    if (lengths[N] > best_length) {
      best_length = lengths[N];
      best = std::move(lengths);
      est.generator = g;
    }
  }

  for (std::size_t k = 1; k <= N; ++k)
    est.ratios.push_back(best[k].convert_to<double>() / best[k - 1].convert_to<double>());
  for (std::size_t k = 2; k < est.ratios.size(); ++k) {
    const auto [lo, hi] = std::minmax({est.ratios[k - 2], est.ratios[k - 1], est.ratios[k]});
    est.spreads.push_back(hi - lo);
  }
  for (std::size_t end = est.spreads.size(), blocks = 0; end >= 4 && blocks < 3; end -= 4, ++blocks)
    est.block_spreads.insert(est.block_spreads.begin(),
                             *std::max_element(est.spreads.begin() + static_cast<long>(end) - 4, est.spreads.begin() + static_cast<long>(end)));
  est.narrowing = est.block_spreads.size() >= 2 &&
                  std::adjacent_find(est.block_spreads.begin(), est.block_spreads.end(), std::less_equal<>()) == est.block_spreads.end();
  const double r0 = est.ratios[N - 3], r1 = est.ratios[N - 2], r2 = est.ratios[N - 1];
  est.ratio = r2;
  est.spread = est.spreads.back();
  const double denom = r2 - 2 * r1 + r0;
  est.aitken = std::abs(denom) > 1e-15 * std::abs(r2) ? r2 - (r2 - r1) * (r2 - r1) / denom : r2;
  est.root = std::exp(std::log(best[N].convert_to<double>()) / static_cast<double>(N));
  est.gr1 = accel ? est.aitken : est.ratio;
  est.log_gr1 = std::log(est.gr1);
  return est;
}

}  // namespace lehmer
