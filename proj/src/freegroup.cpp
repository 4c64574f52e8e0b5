#include "lehmer/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lehmer {

namespace {

BigInt to_bigint(const Exponent& e) {
  if (boost::multiprecision::msb(boost::multiprecision::abs(e) + 1) < 62) return BigInt(e.convert_to<long long>());
  return BigInt(e.str());
}

Exponent to_exponent(const BigInt& x) {
  if (abs(x) < BigInt(1) << 62) return Exponent(x.convert_to<long long>());
  return Exponent(x.str());
}

/// Appends one run to a reduced stack, cancelling and merging as needed.
void push_run(std::vector<Run>& stack, std::uint32_t gen, const Exponent& exp) {
  if (exp == 0) return;
  if (!stack.empty() && stack.back().gen == gen) {
    stack.back().exp += exp;
    if (stack.back().exp == 0) stack.pop_back();
    return;
  }
  stack.push_back({gen, exp});
}

void push_word(std::vector<Run>& stack, const std::vector<Run>& runs, std::size_t cap) {
  for (const auto& r : runs) {
    push_run(stack, r.gen, r.exp);
    if (stack.size() > cap) throw BudgetError("word exceeds the run cap of " + std::to_string(cap));
  }
}

void push_inverse(std::vector<Run>& stack, const std::vector<Run>& runs, std::size_t cap) {
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    push_run(stack, it->gen, -it->exp);
    if (stack.size() > cap) throw BudgetError("word exceeds the run cap of " + std::to_string(cap));
  }
}

void require_rank(const Word& w, std::uint32_t i) {
  if (i < 1 || i > w.rank()) throw DomainError("generator index out of range");
}

}  // namespace

struct WordAccess {
  static Word adopt(std::size_t rank, std::vector<Run> runs) {
    Word w(rank);
    w.runs_ = std::move(runs);
    return w;
  }
};

Word reduce(std::size_t rank, const std::vector<Run>& raw) {
  std::vector<Run> stack;
  for (const auto& r : raw) {
    if (r.gen < 1 || r.gen > rank) throw DomainError("generator index out of range");
    push_run(stack, r.gen, r.exp);
  }
  return WordAccess::adopt(rank, std::move(stack));
}

Word Word::generator(std::size_t rank, std::uint32_t i, const Exponent& e) {
  return reduce(rank, {{i, e}});
}

Word Word::from_runs(std::size_t rank, const std::vector<Run>& runs) { return reduce(rank, runs); }

BigInt Word::length() const {
  Exponent total = 0;
  for (const auto& r : runs_) total += boost::multiprecision::abs(r.exp);
  return to_bigint(total);
}

BigInt Word::exponent_sum(std::uint32_t i) const {
  require_rank(*this, i);
  Exponent total = 0;
  for (const auto& r : runs_)
    if (r.gen == i) total += r.exp;
  return to_bigint(total);
}

BigInt Word::occurrences(std::uint32_t i) const {
  require_rank(*this, i);
  Exponent total = 0;
  for (const auto& r : runs_)
    if (r.gen == i) total += boost::multiprecision::abs(r.exp);
  return to_bigint(total);
}

bool Word::is_positive() const {
  return std::all_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.exp > 0; });
}

Word Word::inverse() const {
  std::vector<Run> out;
  out.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.push_back({it->gen, -it->exp});
  return WordAccess::adopt(rank_, std::move(out));
}

Word Word::operator*(const Word& other) const {
  if (rank_ != other.rank_) throw DomainError("word ranks differ");
  std::vector<Run> stack = runs_;
  push_word(stack, other.runs_, std::numeric_limits<std::size_t>::max());
  return WordAccess::adopt(rank_, std::move(stack));
}

Word Word::pow(const Exponent& k, std::size_t run_cap) const {
  if (k == 0 || runs_.empty()) return Word(rank_);
  if (k < 0) return inverse().pow(-k, run_cap);
  if (runs_.size() == 1) return WordAccess::adopt(rank_, {{runs_[0].gen, runs_[0].exp * k}});
  // Square and multiply; conjugating parts cancel at each seam.
  std::vector<Run> result;
  std::vector<Run> base = runs_;
  Exponent e = k;
  while (true) {
    if ((e & 1) != 0) push_word(result, base, run_cap);
    e >>= 1;
    if (e == 0) break;
    std::vector<Run> doubled = base;
    push_word(doubled, base, run_cap);
    base = std::move(doubled);
  }
  return WordAccess::adopt(rank_, std::move(result));
}

Endo::Endo(std::vector<Word> images) : images_(std::move(images)) {
  for (const auto& w : images_)
    if (w.rank() != images_.size()) throw DomainError("endomorphism images must have rank " + std::to_string(images_.size()));
}

Endo Endo::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::uint32_t i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Endo(std::move(images));
}

Word apply(const Endo& phi, const Word& w, std::size_t run_cap) {
  if (phi.rank() != w.rank()) throw DomainError("apply: rank mismatch");
  std::vector<Run> stack;
  for (const auto& r : w.runs()) {
    const Word& image = phi.image(r.gen);
    if (r.exp == 1) {
      push_word(stack, image.runs(), run_cap);
    } else if (r.exp == -1) {
      push_inverse(stack, image.runs(), run_cap);
    } else if (image.run_count() == 1) {
      push_run(stack, image.runs()[0].gen, image.runs()[0].exp * r.exp);
    } else {
      push_word(stack, image.pow(r.exp, run_cap).runs(), run_cap);
    }
  }
  return WordAccess::adopt(w.rank(), std::move(stack));
}

Endo compose(const Endo& phi, const Endo& psi, std::size_t run_cap) {
  if (phi.rank() != psi.rank()) throw DomainError("compose: rank mismatch");
  std::vector<Word> images;
  for (const auto& w : psi.images()) images.push_back(apply(phi, w, run_cap));
  return Endo(std::move(images));
}

ExactSeq iterate_lengths(const Endo& phi, const Word& w, std::size_t N, std::size_t run_cap) {
  if (N < 1) throw DomainError("iterate_lengths: N must be positive");
  std::vector<BigRat> out;
  Word current = w;
  for (std::size_t n = 1; n <= N; ++n) {
    current = apply(phi, current, run_cap);
    out.emplace_back(current.length());
  }
  return ExactSeq(std::move(out));
}

EndoGrowthReport growth_report(const Endo& phi, std::size_t k_max, const GrowthOptions& options) {
  EndoGrowthReport report;
  report.iterations = options.iterations;
  report.maxima.assign(k_max + 1, 0.0);
  for (std::uint32_t i = 1; i <= phi.rank(); ++i) {
    report.basis.push_back(generator_name(phi.rank(), i));
    const ExactSeq lengths = iterate_lengths(phi, Word::generator(phi.rank(), i), options.iterations, options.run_cap);
    report.per_generator.push_back(lehmer::growth_report(lengths, k_max, options.window, options.tol));
    for (std::size_t k = 0; k <= k_max; ++k)
      report.maxima[k] = std::max(report.maxima[k], report.per_generator.back().entries[k].value());
  }
  return report;
}

GrowthReport growth_report_sum(const Endo& phi, std::size_t k_max, const GrowthOptions& options) {
  if (phi.rank() == 0) throw DomainError("growth_report_sum: rank must be positive");
  ExactSeq total;
  for (std::uint32_t i = 1; i <= phi.rank(); ++i) {
    const ExactSeq lengths = iterate_lengths(phi, Word::generator(phi.rank(), i), options.iterations, options.run_cap);
    total = i == 1 ? lengths : total + lengths;
  }
  return lehmer::growth_report(total, k_max, options.window, options.tol);
}

Endo endo_from_matrix(const IntMatrix& a) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw DomainError("endo_from_matrix: matrix must be square");
  const auto m = static_cast<std::size_t>(a.rows());
  std::vector<Word> images;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<Run> runs;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < 0) throw DomainError("endo_from_matrix: entries must be nonnegative");
      runs.push_back({static_cast<std::uint32_t>(j + 1), to_exponent(a(i, j))});
    }
    images.push_back(reduce(m, runs));
  }
  return Endo(std::move(images));
}

IntMatrix abelianization(const Endo& phi) {
  const auto m = static_cast<Eigen::Index>(phi.rank());
  IntMatrix out(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i)
      out(i, j) = phi.image(static_cast<std::uint32_t>(j + 1)).exponent_sum(static_cast<std::uint32_t>(i + 1));
  return out;
}

F2Descent positive_f2_aut(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DomainError("positive_f2_aut: matrix must be 2x2");
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      if (a(i, j) < 0) throw DomainError("positive_f2_aut: entries must be nonnegative");
  const BigInt det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (det != 1 && det != -1) throw DomainError("positive_f2_aut: matrix must have determinant +-1");

  const Word ga = Word::generator(2, 1), gb = Word::generator(2, 2);
  F2Descent out;
  // Permutation matrices have incomparable columns; every other case has
  // one column dominating the other.
  if (a(0, 1) == 0 && a(1, 0) == 0) {
    out.phi = Endo({ga, gb});
    out.columns = {{a(0, 0), a(1, 0)}, {a(0, 1), a(1, 1)}};
    return out;
  }
  if (a(0, 0) == 0 && a(1, 1) == 0) {
    out.phi = Endo({gb, ga});
    out.columns = {{a(0, 0), a(1, 0)}, {a(0, 1), a(1, 1)}};
    return out;
  }
  IntMatrix b = a;
  if (!(a(0, 0) >= a(0, 1) && a(1, 0) >= a(1, 1))) {
    // Exchange generators: PAP.
    b << a(1, 1), a(1, 0), a(0, 1), a(0, 0);
    out.swapped = true;
  }
  std::vector<BigInt> p{b(0, 0), b(0, 1)}, q{b(1, 0), b(1, 1)};
  while (true) {
    const std::size_t k = p.size() - 2;
    BigInt d = -1;
    if (p[k + 1] > 0) d = p[k] / p[k + 1];
    if (q[k + 1] > 0) d = d < 0 ? BigInt(q[k] / q[k + 1]) : std::min(d, BigInt(q[k] / q[k + 1]));
    if (d < 0) throw ConsistencyError("positive_f2_aut: zero column during descent");
    out.d.push_back(d);
    p.push_back(p[k] - d * p[k + 1]);
    q.push_back(q[k] - d * q[k + 1]);
    if (p.back() == 0 || q.back() == 0) break;
  }
  const std::size_t n = p.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) out.columns.emplace_back(p[k], q[k]);

  auto ab = [&](const BigInt& x, const BigInt& y) {
    return reduce(2, {{1, to_exponent(x)}, {2, to_exponent(y)}});
  };
  std::vector<Word> u{ab(p[n], q[n]), ab(p[n - 1], q[n - 1])};
  for (std::size_t k = 1; k + 1 <= n; ++k) u.push_back(u[k].pow(to_exponent(out.d[n - k - 1])) * u[k - 1]);
  Endo phi({u[n], u[n - 1]});
  if (out.swapped) {
    const Endo swap({gb, ga});
    phi = compose(swap, compose(phi, swap));
  }
  out.phi = phi;
  return out;
}

bool nielsen_verify_basis(const Word& u0, const Word& v0) {
  if (u0.rank() != 2 || v0.rank() != 2) throw DomainError("nielsen_verify_basis: words must lie in F_2");
  Word u = u0, v = v0;
  auto single = [](const Word& w) {
    return w.run_count() == 1 && (w.runs()[0].exp == 1 || w.runs()[0].exp == -1);
  };
  while (true) {
    if (u.empty() || v.empty()) return false;
    if (single(u) && single(v)) return u.runs()[0].gen != v.runs()[0].gen;
    const BigInt current = u.length() + v.length();
    const Word ui = u.inverse(), vi = v.inverse();
    const std::pair<Word, Word> moves[] = {
        {u * v, v}, {u * vi, v}, {v * u, v}, {vi * u, v}, {u, v * u}, {u, v * ui}, {u, u * v}, {u, ui * v},
    };
    const std::pair<Word, Word>* best = nullptr;
    BigInt best_length = current;
    for (const auto& m : moves) {
      const BigInt len = m.first.length() + m.second.length();
      if (len < best_length) {
        best_length = len;
        best = &m;
      }
    }
    if (best == nullptr) return false;
    u = best->first;
    v = best->second;
  }
}

std::string generator_name(std::size_t rank, std::uint32_t i) {
  if (rank <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return "g" + std::to_string(i);
}

Word parse_word(std::string_view text, std::size_t rank) {
  std::vector<Run> runs;
  std::size_t pos = 0, max_gen = 0;
  bool letters = false, indexed = false, explicit_one = false;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (c == '*' || c == '.') {
      ++pos;
      continue;
    }
    std::uint32_t gen = 0;
    if (c == '1' && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      explicit_one = true;
      ++pos;
      continue;
    }
    if (c == 'g' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      gen = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, pos - start))));
      if (gen == 0) throw ParseError("generator index must be positive");
      indexed = true;
    } else if (c >= 'a' && c <= 'z') {
      gen = static_cast<std::uint32_t>(c - 'a' + 1);
      ++pos;
      letters = true;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in word");
    }
    Exponent e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      bool paren = pos < text.size() && text[pos] == '(';
      if (paren) ++pos;
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string digits(text.substr(start, pos - start));
      if (digits.empty() || digits == "-" || digits == "+") throw ParseError("missing exponent in word");
      e = Exponent(digits[0] == '+' ? digits.substr(1) : digits);
      if (paren) {
        if (pos >= text.size() || text[pos] != ')') throw ParseError("unbalanced parenthesis in word exponent");
        ++pos;
      }
    }
    max_gen = std::max<std::size_t>(max_gen, gen);
    runs.push_back({gen, e});
  }
  if (letters && indexed) throw ParseError("mixing letter and g<i> generator names");
  if (explicit_one && !runs.empty()) throw ParseError("'1' denotes the empty word and cannot be combined");
  if (runs.empty() && !explicit_one) throw ParseError("empty word text; use 1 for the identity");
  if (rank == 0) rank = std::max<std::size_t>(max_gen, 1);
  if (max_gen > rank) throw ParseError("generator beyond rank " + std::to_string(rank));
  return reduce(rank, runs);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& r : w.runs()) {
    if (!first) out << ' ';
    first = false;
    out << generator_name(w.rank(), r.gen);
    if (r.exp != 1) out << '^' << r.exp;
  }
  return out.str();
}

Endo parse_endo(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> clauses;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    const std::string_view clause = text.substr(start, semi - start);
    start = semi + 1;
    if (clause.find_first_not_of(" \t\r\n") == std::string_view::npos) continue;
    const auto arrow = clause.find("->");
    if (arrow == std::string_view::npos) throw ParseError("endomorphism clause without '->'");
    clauses.emplace_back(std::string(clause.substr(0, arrow)), std::string(clause.substr(arrow + 2)));
  }
  if (clauses.empty()) throw ParseError("empty endomorphism");
  const std::size_t rank = clauses.size();
  std::vector<std::optional<Word>> images(rank);
  for (const auto& [lhs, rhs] : clauses) {
    const Word g = parse_word(lhs, rank);
    if (g.run_count() != 1 || g.runs()[0].exp != 1) throw ParseError("left side must be a single generator");
    const std::uint32_t i = g.runs()[0].gen;
    if (images[i - 1]) throw ParseError("generator " + generator_name(rank, i) + " defined twice");
    images[i - 1] = parse_word(rhs, rank);
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!images[i]) throw ParseError("missing image for " + generator_name(rank, static_cast<std::uint32_t>(i + 1)));
    out.push_back(*images[i]);
  }
  return Endo(std::move(out));
}

std::string format_endo(const Endo& phi) {
  std::ostringstream out;
  for (std::uint32_t i = 1; i <= phi.rank(); ++i) {
    if (i > 1) out << "; ";
    out << generator_name(phi.rank(), i) << " -> " << format_word(phi.image(i));
  }
  return out.str();
}

}  // namespace lehmer
