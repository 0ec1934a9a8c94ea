#include <doctest.h>

#include <random>

#include "jcalc/lyndon.hpp"
#include "jcalc/magnus.hpp"
#include "jcalc/nilpotent.hpp"
#include "oracles/collection.hpp"
#include "support.hpp"

using namespace jcalc;

namespace {

const char* kPsi = "x1 -> x1 x2 x1 x2^-1 x1^-1\nx2 -> x2\n";

Word w2(const char* text) { return parse_word(text, 2); }

// A random automorphism of N_k at n = 2: unimodular linear part composed with
// a degree-2 correction.
AutNk random_autnk(std::mt19937_64& rng, int k) {
  Endomorphism phi = Endomorphism::identity(2);
  for (int m = std::uniform_int_distribution<int>(1, 4)(rng); m > 0; --m) phi = compose(phi, support::nielsen(rng, 2));
  phi = compose(phi, support::commutator_insertion(rng, 2, 2));
  return phi_k(phi, k);
}

}  // namespace

TEST_CASE("coset equality") {
  CHECK(nk_equal({2, w2("x1 [x1,x2]")}, {2, w2("x1")}));
  CHECK_FALSE(nk_equal({3, w2("x1 [x1,x2]")}, {3, w2("x1")}));
  CHECK(nk_equal({4, w2("x2 x1")}, {4, w2("x2 x1")}));
  CHECK_THROWS(nk_equal({3, w2("x1")}, {2, w2("x1")}));
}

TEST_CASE("normal forms are canonical") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const Word u = support::random_word(rng, 2, 14);
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const Word nf = nk_normal_form(u, k);
    CHECK(nk_equal({k, nf}, {k, u}));
    // Independent check against the collection oracle at k = 4.
    if (k == 4) CHECK(oracle::normal_form(nf * u.inverse()) == oracle::Exponents{});
    const Word v = u * support::random_gamma_word(rng, 2, k, 2);
    CHECK(nk_normal_form(v, k) == nf);
  }
}

TEST_CASE("induced automorphisms") {
  const Endomorphism psi = parse_endomorphism(kPsi);
  CHECK(phi_k(psi, 2).is_identity());
  const AutNk p3 = phi_k(psi, 3);
  CHECK_FALSE(p3.is_identity());
  CHECK(lie_coordinates(p3.lift().image(1) * w2("x1^-1"), 2).coords == std::vector<std::int64_t>{-1});
  CHECK(phi_k(Endomorphism::identity(3), 4).is_identity());
  CHECK_THROWS_AS(phi_k(parse_endomorphism("x1 -> x1^2\nx2 -> x2\n"), 3), PreconditionError);
  CHECK_THROWS_AS(phi_k(psi, 1), PreconditionError);
}

TEST_CASE("well-definedness and tower compatibility") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 60; ++t) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const Endomorphism phi = support::random_endo(rng, 2);
    std::vector<Word> perturbed;
    for (const Word& w : phi.images()) perturbed.push_back(w * support::random_commutator(rng, 2, k, 2));
    CHECK(phi_k(Endomorphism(perturbed), k) == phi_k(phi, k));
    CHECK(project(phi_k(phi, k + 1), k) == phi_k(phi, k));
    // Composition respects cosets of the lifts.
    const Endomorphism chi = support::random_endo(rng, 2);
    CHECK(autnk_compose(phi_k(Endomorphism(perturbed), k), phi_k(chi, k)) == phi_k(compose(phi, chi), k));
  }
}

TEST_CASE("composition") {
  const Endomorphism psi = parse_endomorphism(kPsi);
  const AutNk p = phi_k(psi, 3);
  const AutNk pp = autnk_compose(p, p);
  const Word c = psi.image(1) * w2("x1^-1");
  CHECK(nk_equal({3, pp.lift().image(1)}, {3, w2("x1") * c * c}));
  CHECK(autnk_compose(AutNk::identity(2, 3), p) == p);
}

TEST_CASE("inversion") {
  CHECK(autnk_invert(AutNk::identity(2, 3)).is_identity());
  const AutNk p = phi_k(parse_endomorphism(kPsi), 3);
  CHECK(autnk_compose(p, autnk_invert(p)).is_identity());
  const AutNk swap = phi_k(parse_endomorphism("x1 -> x2\nx2 -> x1\n"), 2);
  CHECK(autnk_invert(swap) == swap);

  std::mt19937_64 rng(71);
  for (int t = 0; t < 30; ++t) {
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    const AutNk a = random_autnk(rng, k);
    const AutNk inv = autnk_invert(a);
    CHECK(autnk_compose(a, inv).is_identity());
    CHECK(autnk_compose(inv, a).is_identity());
    const AutNk b = random_autnk(rng, k);
    const AutNk c = random_autnk(rng, k);
    CHECK(autnk_compose(autnk_compose(a, b), c) == autnk_compose(a, autnk_compose(b, c)));
  }
}

TEST_CASE("boundary certificate") {
  for (int k = 2; k <= 4; ++k) CHECK(is_aut0(AutNk::identity(2, k), 1));
  CHECK(is_aut0(AutNk::identity(4, 3), 2));
  const Endomorphism psi = parse_endomorphism(kPsi);
  const Word zeta = boundary_word(1);
  CHECK(is_aut0(phi_k(psi, 2), 1) == in_gamma(apply(psi, zeta) * zeta.inverse(), 3, 3));
  CHECK_FALSE(is_aut0(phi_k(parse_endomorphism("x1 -> x2\nx2 -> x1\n"), 2), 1));
  CHECK_THROWS_AS(is_aut0(AutNk::identity(3, 2), 1), PreconditionError);
  CHECK_THROWS_AS(is_aut0(AutNk::identity(2, 2), 2), PreconditionError);
}

TEST_CASE("realizing certified targets") {
  CHECK(realize_aut0(AutNk::identity(2, 3), 1) == Endomorphism::identity(2));
  const Endomorphism sub = parse_endomorphism("x1 -> x1 [x1,x2]\nx2 -> x2\n");
  const Word zeta = boundary_word(1);
  const Word defect = apply(sub, zeta) * zeta.inverse();
  // sub(zeta) zeta^-1 = [zeta, x2] modulo Gamma^4: certified at k = 2 only.
  CHECK(lcs_degree(defect, 4) == LcsDegree{LcsDegree::Kind::Finite, 3});
  CHECK(oracle::in_gamma(defect, 3));
  CHECK_FALSE(oracle::in_gamma(defect, 4));
  CHECK(is_aut0(phi_k(sub, 2), 1));
  CHECK(realize_aut0(phi_k(sub, 2), 1) == sub);
  CHECK_FALSE(is_aut0(phi_k(sub, 3), 1));
  CHECK_THROWS_AS(realize_aut0(phi_k(sub, 3), 1), PreconditionError);

  // An insertion from Gamma^3 keeps the certificate at k = 3.
  const Endomorphism deep = parse_endomorphism("x1 -> x1 [[x1,x2],x1]\nx2 -> x2\n");
  const AutNk target = phi_k(deep, 3);
  REQUIRE(is_aut0(target, 1));
  CHECK(phi_k(realize_aut0(target, 1), 3) == target);
  CHECK_THROWS_AS(realize_aut0(phi_k(parse_endomorphism("x1 -> x2\nx2 -> x1\n"), 2), 1), PreconditionError);
}

TEST_CASE("certificates are closed under composition") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 20; ++t) {
    const int k = std::uniform_int_distribution<int>(2, 3)(rng);
    const AutNk a = phi_k(support::surface_endo(rng, k), k);
    const AutNk b = phi_k(support::surface_endo(rng, k), k);
    REQUIRE(is_aut0(a, 1));
    REQUIRE(is_aut0(b, 1));
    CHECK(is_aut0(autnk_compose(a, b), 1));
  }
}

TEST_CASE("serialization") {
  const AutNk p = phi_k(parse_endomorphism(kPsi), 3);
  CHECK(to_string(p) == "# level k=3\nx1 -> x1 x2 x1 x2^-1 x1^-1\nx2 -> x2\n");
  CHECK(parse_autnk(to_string(p)) == p);
  CHECK(parse_autnk(to_string(p)).level() == 3);
}
