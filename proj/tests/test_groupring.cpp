#include <doctest.h>

#include <random>

#include "jcalc/groupring.hpp"
#include "support.hpp"

using namespace jcalc;

namespace {

GroupRingElem term(const char* w, Integer c = 1, int rank = 2) { return GroupRingElem(parse_word(w, rank), c); }
GroupRingElem one(int rank = 2) { return GroupRingElem::constant(rank, 1); }

GroupRingElem random_element(std::mt19937_64& rng, int rank) {
  GroupRingElem out(rank);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int i = count(rng); i > 0; --i) out.add_term(support::random_word(rng, rank, 5), coeff(rng));
  return out;
}

LaurentPoly random_laurent(std::mt19937_64& rng, int rank) {
  LaurentPoly out(rank);
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exponent(-2, 2);
  for (int i = count(rng); i > 0; --i) {
    Exponents e(static_cast<std::size_t>(rank));
    for (int& x : e) x = exponent(rng);
    out.add_term(e, coeff(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((term("x1") + one()) * (term("x1") - one()) == term("x1^2") - one());
  const GroupRingElem a = term("x1 x2") - term("x2");
  CHECK(one() * a == a);
  CHECK(term("x1") * term("x2") != term("x2") * term("x1"));
  CHECK((term("x1") - term("x1")).is_zero());
  CHECK(to_string(Integer(2) * term("x1") - term("x2^-1 x1")) == "2*x1 - x2^-1 x1");
  CHECK(to_string(GroupRingElem(2)) == "0");
}

TEST_CASE("bar and augmentation") {
  CHECK(bar(term("x1 x2")) == term("x2^-1 x1^-1"));
  CHECK(bar(Integer(2) * term("x1") - Integer(3) * one()) == Integer(2) * term("x1^-1") - Integer(3) * one());
  CHECK(augmentation(term("x1") - one()) == 0);
  CHECK(augmentation(Integer(3) * term("x1 x2") + Integer(2) * one()) == 5);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const GroupRingElem a = random_element(rng, 2);
    const GroupRingElem b = random_element(rng, 2);
    CHECK(bar(bar(a)) == a);
    CHECK(bar(a * b) == bar(b) * bar(a));
    CHECK(augmentation(a * b) == augmentation(a) * augmentation(b));
    CHECK(augmentation(bar(a)) == augmentation(a));
    CHECK(abelianize(bar(a)) == bar(abelianize(a)));
    CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
    CHECK(a * (b + a) == a * b + a * a);
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianize(term("x1 x2 x1^-1 x2^-1")) == LaurentPoly::constant(2, 1));
  const LaurentPoly e11 = abelianize(one() + term("x2^-1 x1^-1") - term("x1 x2 x1^-1 x2^-1 x1^-1"));
  CHECK(to_string(e11) == "1 + x1^-1 x2^-1 - x1^-1");
  const LaurentPoly e21 = abelianize(term("x1^-1") - term("x2 x1^-1 x2^-1 x1^-1"));
  CHECK(e21 == LaurentPoly::monomial({-1, 0}) - LaurentPoly::monomial({-2, 0}));
}

TEST_CASE("units") {
  CHECK(is_unit(LaurentPoly::monomial({2, -1}, -1)));
  CHECK_FALSE(is_unit(LaurentPoly::constant(2, 1) + LaurentPoly::monomial({-1, -1}) - LaurentPoly::monomial({-1, 0})));
  CHECK_FALSE(is_unit(LaurentPoly(2)));
  CHECK_FALSE(is_unit(LaurentPoly::constant(2, 2)));
}

TEST_CASE("Laurent determinants") {
  CHECK(laurent_det(LaurentMatrix::identity(3, 2)) == LaurentPoly::constant(2, 1));
  CHECK_THROWS_AS(laurent_det(LaurentMatrix(2, 3, 2)), PreconditionError);

  // Permutation matrices give the sign.
  LaurentMatrix p(3, 3, 1);
  p(0, 1) = LaurentPoly::constant(1, 1);
  p(1, 0) = LaurentPoly::constant(1, 1);
  p(2, 2) = LaurentPoly::constant(1, 1);
  CHECK(laurent_det(p) == LaurentPoly::constant(1, -1));
  LaurentMatrix cyc(3, 3, 1);
  cyc(0, 1) = cyc(1, 2) = cyc(2, 0) = LaurentPoly::constant(1, 1);
  CHECK(laurent_det(cyc) == LaurentPoly::constant(1, 1));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    LaurentMatrix a(2, 2, 2), b(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = random_laurent(rng, 2);
        b(i, j) = random_laurent(rng, 2);
      }
    CHECK(laurent_det(a * b) == laurent_det(a) * laurent_det(b));
  }
  // Products of unit-determinant matrices keep unit determinants.
  LaurentMatrix u(2, 2, 2), v(2, 2, 2);
  u(0, 0) = LaurentPoly::monomial({1, 0});
  u(0, 1) = random_laurent(rng, 2);
  u(1, 1) = LaurentPoly::monomial({0, -1}, -1);
  v(0, 0) = LaurentPoly::constant(2, 1);
  v(1, 0) = random_laurent(rng, 2);
  v(1, 1) = LaurentPoly::monomial({2, 1});
  CHECK(is_unit(laurent_det(u)));
  CHECK(is_unit(laurent_det(v)));
  CHECK(is_unit(laurent_det(u * v)));
}

TEST_CASE("integer determinant and rank") {
  CHECK(integer_det(std::vector<std::vector<int>>{{2, 1}, {1, 1}}) == 1);
  CHECK(integer_det(std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  CHECK(integer_det(std::vector<std::vector<int>>{{1, 2}, {2, 4}}) == 0);
  CHECK(integer_det(std::vector<std::vector<int>>{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
  using Rows = std::vector<std::vector<Integer>>;
  CHECK(integer_rank(Rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  CHECK(integer_rank(Rows{{0, 0}, {0, 0}}) == 0);
  CHECK(integer_rank(Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) == 3);
}
