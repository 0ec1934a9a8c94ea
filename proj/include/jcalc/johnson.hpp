#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jcalc/lyndon.hpp"
#include "jcalc/magnus.hpp"
#include "jcalc/words.hpp"

namespace jcalc {

// J_k(phi) in Hom(H_1, Gamma^k / Gamma^{k+1}): one Lie vector per generator.
struct JohnsonValue {
  int rank = 0;
  int k = 0;
  std::vector<LieVector> values;

  bool is_zero() const;
  JohnsonValue& operator+=(const JohnsonValue& other);
  friend JohnsonValue operator+(JohnsonValue a, const JohnsonValue& b) { return a += b; }
  friend bool operator==(const JohnsonValue&, const JohnsonValue&) = default;
};

// Refined value in Hom(H_1, Gamma^k / Gamma^{2k-1}): per generator, the
// Magnus series of phi(x_i) x_i^-1 truncated at degree 2k-2. Series are the
// canonical coset encoding; no splitting of the graded pieces is chosen.
struct RefinedJohnsonValue {
  int rank = 0;
  int k = 0;
  std::vector<TruncSeries> cosets;

  bool is_zero() const;
  friend bool operator==(const RefinedJohnsonValue&, const RefinedJohnsonValue&) = default;
};

// Largest k <= cap with phi(x_i) x_i^-1 in Gamma^k for every i, i.e. the
// filtration level of phi. phi must be 2-connected.
int filtration_level(const Endomorphism& phi, int cap);

JohnsonValue johnson(const Endomorphism& phi, int k);
RefinedJohnsonValue refined_johnson(const Endomorphism& phi, int k);

// p_1: degree-k Lie part of each coset.
JohnsonValue first_projection(const RefinedJohnsonValue& value);

// Group law of the (abelian) target: truncated product per generator.
RefinedJohnsonValue combine(const RefinedJohnsonValue& a, const RefinedJohnsonValue& b);

// phi(w) w^-1 in Gamma^{2k-1} for phi in Aut[k] and w in Gamma^k.
bool check_action_trivial(const Endomorphism& phi, const Word& w, int k);

// Whether refined_johnson(phi, k) vanishes. Independently computes
// filtration_level(phi, 2k-1) >= 2k-1 and throws InvariantViolation if the
// two disagree.
bool refined_kernel_level(const Endomorphism& phi, int k);

// Coordinates of a refined value over the monomials of degrees k..2k-2,
// generator by generator. Injective on refined values.
std::vector<std::int64_t> flatten(const RefinedJohnsonValue& value);

// The value equivariance would predict for alpha phi alpha^-1:
// x_i -> alpha(f(alpha^-1(x_i))) with f(x_j) = phi(x_j) x_j^-1.
// alpha_inverse must be a two-sided inverse of alpha in End F_n.
RefinedJohnsonValue equivariant_prediction(const Endomorphism& alpha, const Endomorphism& alpha_inverse,
                                           const Endomorphism& phi, int k);

// `x1: -[12]` rows, one per generator.
std::string to_string(const JohnsonValue& v);
std::string to_string(const RefinedJohnsonValue& v);

}  // namespace jcalc
