#include <doctest.h>

#include <random>

#include "jcalc/acyclic.hpp"
#include "jcalc/magnus.hpp"
#include "jcalc/nilpotent.hpp"
#include "support.hpp"

using namespace jcalc;

namespace {

const char* kPaperSystem =
    "vars m=2 coeff p=3 class=1\n"
    "x1 = g1 x1 g2 x2 x1^-1 x2^-1\n"
    "x2 = x1 g3 x1^-1\n";

AcyclicSystem commutator_system(int cls) {
  return parse_system("vars m=1 coeff p=2 class=" + std::to_string(cls) + "\nx1 = [g1, x1]\n");
}

// A random acyclic word over g1..gp, x1..xm: random letters with the
// variable exponent sums cancelled by appended inverses.
Word random_acyclic(std::mt19937_64& rng, const Alphabet& a) {
  Word w(a.rank(), support::random_letters(rng, a.rank(), std::uniform_int_distribution<int>(0, 10)(rng)));
  const auto sums = w.exponent_sums();
  for (int j = 1; j <= a.x_count; ++j) {
    const int s = sums[static_cast<std::size_t>(a.x_index(j) - 1)];
    w *= Word::generator(a.rank(), a.x_index(j), -s);
  }
  return w;
}

}  // namespace

TEST_CASE("acyclicity") {
  const Alphabet a{2, 3};
  CHECK(is_acyclic(parse_word("g1 x1 g2 x2 x1^-1 x2^-1", a), a));
  CHECK(is_acyclic(parse_word("x1 g3 x1^-1", a), a));
  CHECK_FALSE(is_acyclic(parse_word("x1", a), a));
  CHECK(is_acyclic(parse_word("g1 g2^5", a), a));
  CHECK_THROWS_AS(parse_system("vars m=1 coeff p=1 class=2\nx1 = g1 x1\n"), PreconditionError);
}

TEST_CASE("the abelian example") {
  const AcyclicSystem sys = parse_system(kPaperSystem);
  const NilpotentSolution sol = solve(sys);
  const Alphabet g{0, 3};
  CHECK(sol.values[0] == parse_word("g1 g2", g));
  CHECK(sol.values[1] == parse_word("g3", g));
  CHECK(to_string(sol) == "x1 = g1 g2\nx2 = g3\n");
  CHECK(verify_uniqueness(sys, 20));
}

TEST_CASE("small systems") {
  const AcyclicSystem constant = parse_system("vars m=1 coeff p=2 class=3\nx1 = g1\n");
  CHECK(solve(constant).values[0] == Word::generator(2, 1));
  CHECK(verify_uniqueness(constant, 10, 5));

  const NilpotentSolution c2 = solve(commutator_system(2));
  CHECK(c2.values[0].empty());
  CHECK(verify_uniqueness(commutator_system(3), 20, 9));
}

TEST_CASE("system file errors") {
  CHECK_THROWS_AS(parse_system("x1 = g1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars m=1 coeff p=1 class=1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars m=1 coeff p=1 class=1\nx1 = g1\nx1 = g1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars m=1 coeff p=1 class=0\nx1 = g1\n"), PreconditionError);
  try {
    parse_system("vars m=1 coeff p=1 class=1\n\nx1 = g1 g2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("solutions are fixed points and seed independent") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 40; ++t) {
    const int cls = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, 2)(rng);
    const CoefficientGroup coeff{2, cls};
    const Alphabet a{m, 2};
    std::vector<Word> eqs;
    for (int i = 0; i < m; ++i) eqs.push_back(random_acyclic(rng, a));
    const AcyclicSystem sys(m, coeff, eqs);
    const NilpotentSolution sol = solve(sys);
    const auto again = evaluate(sys, sol.values);
    for (int i = 0; i < m; ++i) {
      CHECK(nk_equal({cls + 1, again[static_cast<std::size_t>(i)]}, {cls + 1, sol.values[static_cast<std::size_t>(i)]}));
    }
    CHECK(verify_uniqueness(sys, 5, static_cast<std::uint64_t>(t)));
  }
}

TEST_CASE("evaluation contracts the lower central filtration") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 60; ++t) {
    const int cls = std::uniform_int_distribution<int>(1, 4)(rng);
    const int j = std::uniform_int_distribution<int>(1, cls)(rng);
    const Alphabet a{1, 2};
    const AcyclicSystem sys(1, CoefficientGroup{2, cls}, {random_acyclic(rng, a)});
    // Two seeds agreeing modulo Gamma^j.
    const Word x = support::random_word(rng, 2, 6);
    const Word y = x * support::random_gamma_word(rng, 2, j, 2);
    const Word ex = evaluate(sys, {x})[0];
    const Word ey = evaluate(sys, {y})[0];
    CHECK(in_gamma(ex * ey.inverse(), j + 1, j + 1));
  }
}
