#include <doctest.h>

#include "lehmer/freegroup.hpp"
#include "support.hpp"

using namespace lehmer;
using testsupport::P;
using testsupport::pow_int;

namespace {

Word W(std::string_view text, std::size_t rank = 2) { return parse_word(text, rank); }

// phi(x) = x^3, phi(y) = y^2 with x = a, y = b.
Endo example52_xy() { return parse_endo("a -> a^3; b -> b^2"); }
// The same map written in the basis z = xy (as a), y (as b).
Endo example52_zy() { return parse_endo("a -> a b^-1 a b^-1 a b; b -> b^2"); }

IntMatrix random_nonnegative(std::mt19937& rng, int m, int hi) {
  std::uniform_int_distribution<int> entry(0, hi);
  IntMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = entry(rng);
  return a;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce(2, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == Word::generator(2, 1, 2));
  CHECK(reduce(2, {{1, 1}, {1, -1}}).empty());
  CHECK(reduce(2, {{1, 3}, {2, 0}, {1, 2}}) == Word::generator(2, 1, 5));
  // Cascading cancellation.
  CHECK(reduce(3, {{1, 1}, {2, 1}, {3, 2}, {3, -2}, {2, -1}, {1, -1}}).empty());
  CHECK_THROWS_AS(reduce(2, {{3, 1}}), DomainError);

  const Word w = W("a^2 b^-3 a b");
  CHECK(w.length() == 7);
  CHECK(w.exponent_sum(2) == -2);
  CHECK(w.occurrences(2) == 4);
  CHECK_FALSE(w.is_positive());
  CHECK((w * w.inverse()).empty());
  CHECK(Word::from_runs(2, w.runs()) == w);
}

TEST_CASE("word powers") {
  CHECK(W("a").pow(Exponent(1) << 100).runs()[0].exp == Exponent(1) << 100);
  CHECK(W("a b").pow(3) == W("a b a b a b"));
  CHECK(W("a b").pow(-2) == W("b^-1 a^-1 b^-1 a^-1"));
  // A conjugate of a single run stays short for any exponent.
  const Word conj = W("b a^2 b^-1").pow(Exponent(1) << 80);
  CHECK(conj.run_count() == 3);
  CHECK(conj.runs()[1].exp == Exponent(1) << 81);
  CHECK_THROWS_AS(W("a b").pow(Exponent(1) << 40, 1000), BudgetError);
  CHECK(W("a b").pow(0).empty());
}

TEST_CASE("applying endomorphisms") {
  const Endo phi = example52_xy();
  CHECK(apply(phi, W("a b")) == W("a^3 b^2"));
  CHECK(apply(phi, apply(phi, W("a b"))) == W("a^9 b^4"));
  const Word w = W("a^2 b^-3 a b");
  CHECK(apply(Endo::identity(2), w) == w);
  CHECK(apply(phi, W("a^-1")) == W("a^-3"));
  CHECK_THROWS_AS(apply(phi, parse_word("a", 3)), DomainError);

  // a^(3^n) costs one run.
  Word x = W("a");
  for (int n = 0; n < 60; ++n) x = apply(phi, x);
  CHECK(x.run_count() == 1);
  CHECK(x.length() == pow_int(3, 60));

  const Endo fib = parse_endo("a -> a b; b -> a");
  CHECK(compose(fib, fib) == parse_endo("a -> a b a; b -> a b"));
  CHECK_THROWS_AS(iterate_lengths(fib, W("a"), 40, 1000), BudgetError);
}

TEST_CASE("iterated lengths for the diagonal example") {
  const auto x = iterate_lengths(example52_xy(), W("a"), 25);
  const auto y = iterate_lengths(example52_xy(), W("b"), 25);
  for (unsigned n = 1; n <= 25; ++n) {
    CHECK(x(n) == BigRat(pow_int(3, n)));
    CHECK(y(n) == BigRat(pow_int(2, n)));
  }
  const auto z = iterate_lengths(example52_zy(), W("a"), 12);
  for (unsigned n = 1; n <= 12; ++n) CHECK(z(n) == BigRat(2 * pow_int(3, n) + pow_int(2, n) - 2));

  // Oracle: iterate in the x, y basis and rewrite x = z y^-1 afterwards.
  const Endo to_zy = parse_endo("a -> a b^-1; b -> b");
  Word w = W("a b");
  for (unsigned n = 1; n <= 8; ++n) {
    w = apply(example52_xy(), w);
    CHECK(BigRat(apply(to_zy, w).length()) == z(n));
  }

  const auto same = iterate_lengths(Endo::identity(2), W("a b^2"), 5);
  CHECK(same == ExactSeq::from_integers({3, 3, 3, 3, 3}));
}

TEST_CASE("generalized growth rates of endomorphisms") {
  GrowthOptions opt;
  opt.iterations = 25;
  const auto xy = growth_report(example52_xy(), 4, opt);
  CHECK(xy.basis == std::vector<std::string>{"a", "b"});
  CHECK(xy.maxima[0] == 1.0);
  CHECK(xy.maxima[1] == doctest::Approx(3.0));
  for (std::size_t k = 2; k <= 4; ++k) CHECK(xy.maxima[k] == 0.0);

  opt.iterations = 13;
  const auto zy = growth_report(example52_zy(), 5, opt);
  CHECK(zy.maxima[1] == doctest::Approx(3.0));
  CHECK(zy.maxima[2] == doctest::Approx(6.0));
  CHECK(zy.maxima[3] == doctest::Approx(6.0));
  CHECK(zy.maxima[4] == 0.0);
  CHECK(zy.maxima[5] == 0.0);
  REQUIRE(zy.per_generator[0].min_poly);
  CHECK(*zy.per_generator[0].min_poly == P({-1, 1}) * P({-2, 1}) * P({-3, 1}));

  opt.iterations = 20;
  const auto doubling = growth_report(parse_endo("a -> a^2"), 2, opt);
  CHECK(doubling.maxima[1] == doctest::Approx(2.0));
}

TEST_CASE("summed growth rates") {
  GrowthOptions opt;
  opt.iterations = 13;
  const auto xy = growth_report_sum(example52_xy(), 3, opt);
  CHECK(xy.entries[1].value() == doctest::Approx(3.0));
  CHECK(xy.entries[2].value() == doctest::Approx(6.0));
  CHECK(xy.max_growth() == doctest::Approx(6.0));
  const auto zy = growth_report_sum(example52_zy(), 4, opt);
  CHECK(zy.max_growth() == doctest::Approx(6.0));
  CHECK(*zy.min_poly == P({-1, 1}) * P({-2, 1}) * P({-3, 1}));
  CHECK(growth_report_sum(Endo::identity(2), 2, opt).entries[1].value() == doctest::Approx(1.0));
}

TEST_CASE("endomorphisms from matrices and abelianization") {
  CHECK(endo_from_matrix(int_matrix({{1, 1}, {1, 0}})) == parse_endo("a -> a b; b -> a"));
  CHECK(endo_from_matrix(int_matrix({{3, 0}, {0, 2}})) == example52_xy());
  const Endo zero = endo_from_matrix(int_matrix({{0, 0}, {0, 0}}));
  CHECK(zero.image(1).empty());
  CHECK(iterate_lengths(zero, W("a"), 3) == ExactSeq::from_integers({0, 0, 0}));
  CHECK_THROWS_AS(endo_from_matrix(int_matrix({{1, -1}, {0, 1}})), DomainError);

  const IntMatrix a = int_matrix({{1, 2}, {0, 3}});
  CHECK(abelianization(endo_from_matrix(a)) == IntMatrix(a.transpose()));
  CHECK(abelianization(Endo::identity(3)) == identity_matrix(3));
  CHECK(abelianization(parse_endo("a -> b a b^-1; b -> b")) == identity_matrix(2));
}

TEST_CASE("positive automorphisms of F2") {
  const auto r = positive_f2_aut(int_matrix({{2, 1}, {1, 1}}));
  CHECK(r.phi.image(1) == W("a b a"));
  CHECK(r.phi.image(2) == W("a b"));
  CHECK_FALSE(r.swapped);
  CHECK(r.d == std::vector<BigInt>{1});

  CHECK(positive_f2_aut(identity_matrix(2)).phi == Endo::identity(2));
  const auto upper = positive_f2_aut(int_matrix({{1, 1}, {0, 1}}));
  CHECK(upper.phi == parse_endo("a -> a; b -> a b"));
  CHECK(upper.swapped);
  CHECK(positive_f2_aut(int_matrix({{0, 1}, {1, 0}})).phi == parse_endo("a -> b; b -> a"));

  CHECK_THROWS_AS(positive_f2_aut(int_matrix({{2, 0}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(positive_f2_aut(int_matrix({{1, -1}, {0, 1}})), DomainError);
  CHECK(abelianization(positive_f2_aut(int_matrix({{1, 2}, {1, 1}})).phi) == int_matrix({{1, 2}, {1, 1}}));
}

TEST_CASE("Nielsen basis check") {
  CHECK(nielsen_verify_basis(W("a b a"), W("a b")));
  CHECK_FALSE(nielsen_verify_basis(W("a"), W("a")));
  CHECK(nielsen_verify_basis(W("a"), W("b")));
  CHECK(nielsen_verify_basis(W("b^-1"), W("a")));
  CHECK_FALSE(nielsen_verify_basis(W("a^2"), W("b")));
  CHECK_FALSE(nielsen_verify_basis(W("a"), W("b a b^-1")));
  CHECK_FALSE(nielsen_verify_basis(W("1"), W("b")));
}

TEST_CASE("word and endomorphism text formats") {
  CHECK(format_word(W("a^3 b^-2 a")) == "a^3 b^-2 a");
  CHECK(format_word(W("1")) == "1");
  CHECK(parse_word("g1^2 g30^-1", 30).runs()[1].gen == 30);
  CHECK(format_word(parse_word("g1^2 g30^-1", 30)) == "g1^2 g30^-1");
  CHECK(parse_word("b").rank() == 2);
  CHECK(parse_word("a^(-2)*b", 2) == W("a^-2 b"));
  CHECK_THROWS_AS(parse_word("a^", 2), ParseError);
  CHECK_THROWS_AS(parse_word("c", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a g2", 2), ParseError);
  CHECK_THROWS_AS(parse_word("", 2), ParseError);

  const Endo phi = parse_endo("b -> a b; a -> a b a");
  CHECK(format_endo(phi) == "a -> a b a; b -> a b");
  CHECK(parse_endo(format_endo(phi)) == phi);
  CHECK_THROWS_AS(parse_endo("a -> b; a -> a"), ParseError);
  CHECK_THROWS_AS(parse_endo("a b"), ParseError);
  CHECK_THROWS_AS(parse_endo("a -> c; b -> a"), ParseError);
}

TEST_CASE("property: occurrence counts follow matrix powers") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 4;
    const IntMatrix a = random_nonnegative(rng, m, 3);
    const Endo phi = endo_from_matrix(a);
    const IntPoly chi = char_poly(a);
    for (int i = 1; i <= m; ++i) {
      Word w = Word::generator(m, i);
      std::vector<BigRat> lengths;
      for (unsigned n = 1; n <= 6; ++n) {
        w = apply(phi, w);
        CHECK(w.is_positive());
        const IntMatrix an = matrix_power(a, n);
        BigInt row = 0;
        for (int j = 1; j <= m; ++j) {
          CHECK(w.occurrences(j) == an(i - 1, j - 1));
          row += an(i - 1, j - 1);
        }
        CHECK(w.length() == row);
        lengths.emplace_back(w.length());
      }
      // Cayley-Hamilton: the lengths satisfy the char_poly recurrence.
      for (std::size_t n = 0; n + static_cast<std::size_t>(m) < lengths.size(); ++n) {
        BigRat acc = 0;
        for (int j = 0; j <= m; ++j) acc += BigRat(chi[static_cast<std::size_t>(j)]) * lengths[n + j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("property: reduction is idempotent and lengths obey the triangle inequality") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> gen(1, 3), exp(-3, 3), len(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Run> raw;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back({static_cast<std::uint32_t>(gen(rng)), exp(rng)});
    const Word w = reduce(3, raw);
    CHECK(reduce(3, w.runs()) == w);
    for (std::size_t i = 1; i < w.runs().size(); ++i) CHECK(w.runs()[i].gen != w.runs()[i - 1].gen);
    for (const auto& r : w.runs()) CHECK(r.exp != 0);

    std::vector<Word> images;
    for (int g = 0; g < 3; ++g) {
      std::vector<Run> img;
      for (int i = 0; i < 4; ++i) img.push_back({static_cast<std::uint32_t>(gen(rng)), exp(rng)});
      images.push_back(reduce(3, img));
    }
    const Endo phi(images);
    BigInt bound = 0;
    for (const auto& r : w.runs()) bound += BigInt(abs(r.exp).convert_to<long>()) * phi.image(r.gen).length();
    CHECK(apply(phi, w).length() <= bound);
    CHECK(parse_word(format_word(w), 3) == w);
  }
}

TEST_CASE("property: positive F2 automorphisms realize nonnegative GL2 matrices") {
  std::mt19937 rng(29);
  const IntMatrix gens[] = {int_matrix({{1, 1}, {0, 1}}), int_matrix({{1, 0}, {1, 1}}), int_matrix({{0, 1}, {1, 0}})};
  std::uniform_int_distribution<int> pick(0, 2), count(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = identity_matrix(2);
    const int c = count(rng);
    for (int i = 0; i < c; ++i) a = (a * gens[pick(rng)]).eval();
    const auto r = positive_f2_aut(a);
    CHECK(r.phi.image(1).is_positive());
    CHECK(r.phi.image(2).is_positive());
    CHECK(abelianization(r.phi) == a);
    CHECK(nielsen_verify_basis(r.phi.image(1), r.phi.image(2)));
  }
}
